#include "acs/ktheory.hpp"

namespace acs {

void validate(const KSpec& spec) {
    if (spec.m < 1 || spec.n < 1) {
        throw InvalidInput("K-ring needs m >= 1 and n >= 1, got m=" + std::to_string(spec.m) +
                           " n=" + std::to_string(spec.n));
    }
}

KSpec kspec_of(const RingSpec& ring) {
    if (ring.d % 2 != 0) {
        throw InvalidInput("K-ring requires even top degree, got " + to_string(ring));
    }
    return {ring.m, ring.d / 2};
}

std::string to_string(const BasisKey& key) {
    const std::string jk = "_" + std::to_string(key.j) + "^" + std::to_string(key.k);
    switch (key.kind) {
    case BasisKind::EtaPow: return "eta" + jk;
    case BasisKind::HPow: return "H" + jk;
    case BasisKind::E: return "e" + jk;
    case BasisKind::F: return "f" + jk;
    case BasisKind::W: return "w" + jk;
    case BasisKind::Omega: return "omega";
    }
    return "?";
}

IntClass eta(const KSpec& spec, int j) {
    validate(spec);
    return IntClass::generator(spec.ring(), j);
}

IntClass conjugate(const IntClass& z) {
    const RingSpec& ring = z.spec();
    if (ring.domain != Domain::Integer) throw InvalidInput("conjugation acts on the integral K-ring");
    kspec_of(ring);
    std::vector<IntClass> images;
    images.reserve(static_cast<std::size_t>(ring.m));
    const IntClass one = IntClass::one(ring);
    for (int j = 1; j <= ring.m; ++j) {
        const IntClass g = IntClass::generator(ring, j);
        images.push_back(-g * invert_unit(one + g));
    }
    return substitute(z, images);
}

namespace {

void check_range(const KSpec& spec, const BasisKey& key) {
    if (key.kind != BasisKind::Omega && (key.j < 1 || key.j > spec.m)) {
        throw IndexOutOfRange("basis key " + to_string(key) + ": generator outside 1.." +
                              std::to_string(spec.m));
    }
    bool ok = true;
    switch (key.kind) {
    case BasisKind::EtaPow: ok = key.k >= 1 && key.k <= 2 * spec.n; break;
    case BasisKind::HPow: ok = true; break;
    case BasisKind::E:
    case BasisKind::F: ok = key.k >= 0 && key.k <= spec.n - 1; break;
    case BasisKind::W: ok = key.k >= 1 && key.k <= spec.n; break;
    case BasisKind::Omega: ok = true; break;
    }
    if (!ok) throw IndexOutOfRange("basis key " + to_string(key) + " out of range for n=" + std::to_string(spec.n));
}

} // namespace

IntClass basis_element(const KSpec& spec, const BasisKey& key) {
    validate(spec);
    check_range(spec, key);
    const RingSpec ring = spec.ring();
    const IntClass one = IntClass::one(ring);
    switch (key.kind) {
    case BasisKind::EtaPow:
        return pow_int(eta(spec, key.j), key.k);
    case BasisKind::HPow:
        return pow_int(one + eta(spec, key.j), key.k);
    case BasisKind::E: {
        const IntClass e = eta(spec, key.j);
        return e * pow_int(e + conjugate(e), key.k);
    }
    case BasisKind::F: {
        const IntClass e = eta(spec, key.j);
        const IntClass e_bar = conjugate(e);
        return (e - e_bar) * pow_int(e + e_bar, key.k);
    }
    case BasisKind::W: {
        const IntClass h = one + eta(spec, key.j);
        return pow_int(h, key.k) - pow_int(h, -key.k);
    }
    case BasisKind::Omega:
        return pow_int(eta(spec, 1), 2 * spec.n);
    }
    throw InvalidInput("unknown basis kind");
}

IntClass stable_tangent(const KSpec& spec) {
    validate(spec);
    IntClass sum(spec.ring());
    for (int j = 1; j <= spec.m; ++j) sum += conjugate(eta(spec, j));
    return sum * mpz_class(2 * spec.n + 1);
}

IntClass phi(const IntClass& z) { return z + conjugate(z); }

std::vector<KernelElement> kernel_basis(const KSpec& spec) {
    validate(spec);
    std::vector<KernelElement> out;
    const int last_w = spec.n % 2 == 0 ? spec.n - 1 : spec.n;
    for (int j = 1; j <= spec.m; ++j) {
        for (int k = 1; k <= last_w; ++k) {
            BasisKey key{BasisKind::W, j, k};
            out.push_back({to_string(key), basis_element(spec, key)});
        }
    }
    if (spec.n % 2 == 0) {
        const int top_e = spec.n - 1;
        const IntClass e1 = basis_element(spec, {BasisKind::E, 1, top_e});
        for (int j = 2; j <= spec.m; ++j) {
            out.push_back({"e_1^" + std::to_string(top_e) + " - e_" + std::to_string(j) + "^" +
                               std::to_string(top_e),
                           e1 - basis_element(spec, {BasisKind::E, j, top_e})});
        }
        out.push_back({"2e_1^" + std::to_string(top_e) + " - omega",
                       e1 * mpz_class(2) - basis_element(spec, {BasisKind::Omega, 1, 0})});
    }
    return out;
}

std::int64_t SacsCoefficients::a_at(int j, int k) const {
    auto it = a.find({j, k});
    return it == a.end() ? 0 : it->second;
}

std::int64_t SacsCoefficients::b_at(int j) const {
    auto it = b.find(j);
    return it == b.end() ? 0 : it->second;
}

bool SacsCoefficients::operator==(const SacsCoefficients& rhs) const {
    if (m != rhs.m || n != rhs.n) return false;
    for (const auto& [key, v] : a) {
        if (rhs.a_at(key.first, key.second) != v) return false;
    }
    for (const auto& [key, v] : rhs.a) {
        if (a_at(key.first, key.second) != v) return false;
    }
    for (const auto& [j, v] : b) {
        if (rhs.b_at(j) != v) return false;
    }
    for (const auto& [j, v] : rhs.b) {
        if (b_at(j) != v) return false;
    }
    return true;
}

namespace {

bool a_slot_valid(const KSpec& spec, int j, int k) {
    if (j < 1 || j > spec.m || k < 1) return false;
    if (spec.n % 2 == 1) return k <= spec.n;
    return k <= spec.n - 1 || (j == 1 && k == spec.n);
}

} // namespace

void validate(const SacsCoefficients& coeffs) {
    const KSpec spec = coeffs.spec();
    if (spec.m < 1 || spec.n < 1) {
        throw ShapeError("coefficients need m >= 1 and n >= 1, got m=" + std::to_string(spec.m) +
                         " n=" + std::to_string(spec.n));
    }
    for (const auto& [key, value] : coeffs.a) {
        if (!a_slot_valid(spec, key.first, key.second)) {
            throw ShapeError("coefficient a_" + std::to_string(key.first) + "^" + std::to_string(key.second) +
                             " is not part of the family for m=" + std::to_string(spec.m) +
                             " n=" + std::to_string(spec.n));
        }
    }
    for (const auto& [j, value] : coeffs.b) {
        if (spec.n % 2 == 1) {
            throw ShapeError("coefficients b_j only exist for even n, got b_" + std::to_string(j) +
                             " with n=" + std::to_string(spec.n));
        }
        if (j < 2 || j > spec.m) {
            throw ShapeError("coefficient b_" + std::to_string(j) + " outside 2.." + std::to_string(spec.m));
        }
    }
}

std::vector<Slot> slots(const KSpec& spec) {
    validate(spec);
    std::vector<Slot> out;
    const bool even = spec.n % 2 == 0;
    for (int j = 1; j <= spec.m; ++j) {
        const int last = (even && j != 1) ? spec.n - 1 : spec.n;
        for (int k = 1; k <= last; ++k) out.push_back({Slot::Kind::A, j, k});
    }
    if (even) {
        for (int j = 2; j <= spec.m; ++j) out.push_back({Slot::Kind::B, j, 0});
    }
    return out;
}

std::vector<std::int64_t> flatten(const SacsCoefficients& coeffs) {
    validate(coeffs);
    std::vector<std::int64_t> out;
    for (const Slot& s : slots(coeffs.spec())) {
        out.push_back(s.kind == Slot::Kind::A ? coeffs.a_at(s.j, s.k) : coeffs.b_at(s.j));
    }
    return out;
}

SacsCoefficients unflatten(const KSpec& spec, const std::vector<std::int64_t>& values) {
    const auto layout = slots(spec);
    if (layout.size() != values.size()) {
        throw ShapeError("expected " + std::to_string(layout.size()) + " coefficients, got " +
                         std::to_string(values.size()));
    }
    SacsCoefficients c{spec.m, spec.n, {}, {}};
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (values[i] == 0) continue;
        if (layout[i].kind == Slot::Kind::A) {
            c.a[{layout[i].j, layout[i].k}] = values[i];
        } else {
            c.b[layout[i].j] = values[i];
        }
    }
    return c;
}

SacsCoefficients zero_coefficients(const KSpec& spec) {
    validate(spec);
    return {spec.m, spec.n, {}, {}};
}

IntClass sacs_element(const SacsCoefficients& coeffs) {
    validate(coeffs);
    const KSpec spec = coeffs.spec();
    IntClass y = stable_tangent(spec);
    for (const auto& [key, value] : coeffs.a) {
        if (value == 0) continue;
        y += basis_element(spec, {BasisKind::W, key.first, key.second}) * to_mpz(value);
    }
    if (!coeffs.b.empty()) {
        const IntClass top1 = pow_int(eta(spec, 1), 2 * spec.n - 1);
        for (const auto& [j, value] : coeffs.b) {
            if (value == 0) continue;
            y += (top1 - pow_int(eta(spec, j), 2 * spec.n - 1)) * to_mpz(value);
        }
    }
    return y;
}

} // namespace acs
