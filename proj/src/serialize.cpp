#include "acs/serialize.hpp"

namespace acs {

using nlohmann::json;

template <class S>
json to_json(const Truncated<S>& z) {
    json lower = json::array();
    for (const auto& t : z.lower_terms()) lower.push_back(json::array({t.j, t.k, t.value.get_str()}));
    return {{"m", z.spec().m},
            {"d", z.spec().d},
            {"domain", z.spec().domain == Domain::Integer ? "integer" : "rational"},
            {"c0", z.c0().get_str()},
            {"lower", std::move(lower)},
            {"top", z.top().get_str()}};
}

template json to_json(const IntClass&);
template json to_json(const RatClass&);

namespace {

template <class S>
S parse_scalar(const json& v) {
    try {
        if (v.is_number_integer()) return S(std::to_string(v.get<long long>()));
        S s(v.get<std::string>());
        if constexpr (std::is_same_v<S, mpq_class>) s.canonicalize();
        return s;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad scalar: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw InvalidInput("bad scalar: " + v.dump());
    }
}

template <class S>
Truncated<S> class_from_json(const json& j, Domain domain) {
    try {
        const RingSpec spec{j.at("m").get<int>(), j.at("d").get<int>(), domain};
        const std::string dom = j.value("domain", domain == Domain::Integer ? "integer" : "rational");
        if ((dom == "integer") != (domain == Domain::Integer)) throw InvalidInput("domain mismatch: " + dom);
        std::vector<Term<S>> lower;
        for (const auto& t : j.at("lower")) {
            lower.push_back({t.at(0).get<int>(), t.at(1).get<int>(), parse_scalar<S>(t.at(2))});
        }
        return Truncated<S>::from_canonical(spec, parse_scalar<S>(j.at("c0")), lower, parse_scalar<S>(j.at("top")));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed class JSON: ") + e.what());
    }
}

} // namespace

IntClass int_class_from_json(const json& j) { return class_from_json<mpz_class>(j, Domain::Integer); }
RatClass rat_class_from_json(const json& j) { return class_from_json<mpq_class>(j, Domain::Rational); }

json to_json(const SacsCoefficients& c) {
    json a = json::array();
    for (const auto& [key, v] : c.a) {
        if (v != 0) a.push_back({{"j", key.first}, {"k", key.second}, {"value", v}});
    }
    json b = json::array();
    for (const auto& [j, v] : c.b) {
        if (v != 0) b.push_back({{"j", j}, {"value", v}});
    }
    return {{"m", c.m}, {"n", c.n}, {"a", std::move(a)}, {"b", std::move(b)}};
}

SacsCoefficients coefficients_from_json(const json& j) {
    SacsCoefficients c;
    try {
        if (!j.is_object()) throw InvalidInput("coefficients must be a JSON object");
        for (const auto& [key, value] : j.items()) {
            if (key != "m" && key != "n" && key != "a" && key != "b") {
                throw ShapeError("unknown coefficient field \"" + key + "\"");
            }
        }
        c.m = j.at("m").get<int>();
        c.n = j.at("n").get<int>();
        for (const auto& e : j.value("a", json::array())) {
            for (const auto& [key, value] : e.items()) {
                if (key != "j" && key != "k" && key != "value") throw ShapeError("unknown field \"" + key + "\" in a entry");
            }
            const std::pair<int, int> slot{e.at("j").get<int>(), e.at("k").get<int>()};
            if (c.a.contains(slot)) throw ShapeError("duplicate entry a_" + std::to_string(slot.first) + "^" + std::to_string(slot.second));
            c.a[slot] = e.at("value").get<std::int64_t>();
        }
        for (const auto& e : j.value("b", json::array())) {
            for (const auto& [key, value] : e.items()) {
                if (key != "j" && key != "value") throw ShapeError("unknown field \"" + key + "\" in b entry");
            }
            const int slot = e.at("j").get<int>();
            if (c.b.contains(slot)) throw ShapeError("duplicate entry b_" + std::to_string(slot));
            c.b[slot] = e.at("value").get<std::int64_t>();
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed coefficients JSON: ") + e.what());
    }
    validate(c);
    return c;
}

json to_json(const ChernData& c) {
    json arr = json::array({"1"});
    const std::size_t d = c.by_degree.size();
    for (std::size_t k = 0; k + 1 < d; ++k) {
        json row = json::array();
        for (const auto& v : c.by_degree[k]) row.push_back(v.get_str());
        arr.push_back(std::move(row));
    }
    arr.push_back(c.top().get_str());
    return {{"m", c.spec.m}, {"n", c.spec.n}, {"c", std::move(arr)}};
}

json to_json(const WitnessRecord& r) {
    return {{"m", r.coeffs.m},     {"n", r.coeffs.n},   {"coeffs", to_json(r.coeffs)},
            {"c_top", r.c_top.get_str()}, {"chi", r.chi}, {"verdict", r.verdict}};
}

json to_json(const ManifoldInvariants& inv) {
    return {{"m", inv.m},
            {"n", inv.n},
            {"dimension", inv.dimension},
            {"chi", inv.euler},
            {"sigma", inv.signature}};
}

} // namespace acs
