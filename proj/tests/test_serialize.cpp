#include <doctest.h>

#include "acs/chern.hpp"
#include "acs/serialize.hpp"
#include "acs/topology.hpp"
#include "oracles.hpp"

using namespace acs;
using nlohmann::json;

TEST_CASE("class round trip") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const RingSpec spec{1 + trial % 3, 1 + trial % 6, Domain::Integer};
        const auto z = oracle::random_element(rng, spec).value;
        const json j = to_json(z);
        CHECK(int_class_from_json(j) == z);
        CHECK(int_class_from_json(json::parse(j.dump())) == z);
    }
    const RingSpec q{2, 3, Domain::Rational};
    const RatClass r = RatClass::monomial(q, 2, 1, mpq_class(-3, 4)) + RatClass::monomial(q, 1, 3, mpq_class(5, 6));
    const json j = to_json(r);
    CHECK(j["lower"][0][2] == "-3/4");
    CHECK(j["top"] == "5/6");
    CHECK(rat_class_from_json(j) == r);
    CHECK_THROWS_AS(int_class_from_json(j), InvalidInput);
}

TEST_CASE("big values are decimal strings") {
    const RingSpec spec{1, 2, Domain::Integer};
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
    const auto z = IntClass::monomial(spec, 1, 2, big);
    const json j = to_json(z);
    CHECK(j["top"] == big.get_str());
    CHECK(int_class_from_json(j).top() == big);
}

TEST_CASE("coefficient round trip") {
    const SacsCoefficients c{3, 2, {{{1, 1}, 2}, {{1, 2}, -1}, {{3, 1}, 4}}, {{2, 1}, {3, -2}}};
    const json j = to_json(c);
    CHECK(coefficients_from_json(j) == c);
    CHECK(coefficients_from_json(json::parse(R"({"m":1,"n":1})")) == zero_coefficients({1, 1}));

    std::mt19937_64 rng(67);
    std::uniform_int_distribution<std::int64_t> v(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const KSpec s{1 + trial % 4, 1 + trial % 5};
        std::vector<std::int64_t> values(slots(s).size());
        for (auto& x : values) x = v(rng);
        const auto k = unflatten(s, values);
        CHECK(coefficients_from_json(json::parse(to_json(k).dump())) == k);
    }
}

TEST_CASE("coefficient validation") {
    CHECK_THROWS_AS(coefficients_from_json(json::parse(R"([1,2])")), InvalidInput);
    CHECK_THROWS_AS(coefficients_from_json(json::parse(R"({"m":1})")), InvalidInput);
    CHECK_THROWS_AS(coefficients_from_json(json::parse(R"({"m":"x","n":1})")), InvalidInput);
    CHECK_THROWS_AS(coefficients_from_json(json::parse(R"({"m":1,"n":1,"c":[]})")), ShapeError);
    CHECK_THROWS_AS(coefficients_from_json(json::parse(R"({"m":2,"n":1,"b":[{"j":2,"value":1}]})")), ShapeError);
    CHECK_THROWS_AS(coefficients_from_json(json::parse(R"({"m":2,"n":2,"a":[{"j":2,"k":2,"value":1}]})")), ShapeError);
    CHECK_THROWS_AS(coefficients_from_json(json::parse(R"({"m":2,"n":1,"a":[{"j":1,"k":1,"value":1},{"j":1,"k":1,"value":2}]})")),
                    ShapeError);
    CHECK_THROWS_AS(coefficients_from_json(json::parse(R"({"m":2,"n":1,"a":[{"j":1,"k":1,"v":1}]})")), ShapeError);
    CHECK_THROWS_AS(coefficients_from_json(json::parse(R"({"m":0,"n":1})")), ShapeError);
}

TEST_CASE("chern data json") {
    const auto c = total_chern_closed_form(SacsCoefficients{2, 2, {{{1, 1}, 1}}, {{2, 1}}});
    const json j = to_json(c);
    REQUIRE(j["c"].size() == 5);
    CHECK(j["c"][0] == "1");
    CHECK(j["c"][1].size() == 2);
    CHECK(j["c"][1][0] == c.by_degree[0][0].get_str());
    CHECK(j["c"][4] == c.top().get_str());
}

TEST_CASE("record json") {
    const auto r = acs_criterion(odd_sum_witness(3, 2));
    const json j = to_json(r);
    CHECK(j["m"] == 3);
    CHECK(j["n"] == 2);
    CHECK(j["c_top"] == "11");
    CHECK(j["chi"] == 11);
    CHECK(j["verdict"] == true);
    CHECK(coefficients_from_json(j["coeffs"]) == r.coeffs);

    const json inv = to_json(invariants(3, 2));
    CHECK(inv["chi"] == 11);
    CHECK(inv["sigma"] == 3);
    CHECK(inv["dimension"] == 8);
}
