#include "acs/chern.hpp"

namespace acs {

mpz_class factorial(unsigned long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

ChernData make_chern_data(const IntClass& total) {
    const KSpec spec = kspec_of(total.spec());
    if (total.c0() != 1) {
        throw InvalidInput("total Chern class must have constant term 1, got " + total.c0().get_str());
    }
    ChernData out{spec, total, {}};
    const int d = 2 * spec.n;
    for (int k = 1; k < d; ++k) {
        std::vector<mpz_class> row;
        for (int j = 1; j <= spec.m; ++j) row.push_back(total.coefficient(j, k));
        out.by_degree.push_back(std::move(row));
    }
    out.by_degree.push_back({total.top()});
    return out;
}

RatClass chern_character(const IntClass& z) {
    kspec_of(z.spec());
    RingSpec q = z.spec();
    q.domain = Domain::Rational;
    std::vector<RatClass> images;
    for (int j = 1; j <= q.m; ++j) {
        RatClass e(q);
        mpz_class fact = 1;
        for (int k = 1; k <= q.d; ++k) {
            fact *= k;
            e += RatClass::monomial(q, j, k, mpq_class(mpz_class(1), fact));
        }
        images.push_back(std::move(e));
    }
    return substitute(z, images);
}

ChernData character_to_chern(const RatClass& ch) {
    const RingSpec& q = ch.spec();
    kspec_of(q);
    if (sgn(ch.c0()) != 0) {
        throw InvalidInput("character of a reduced class must have zero constant term, got " + ch.c0().get_str());
    }
    const int d = q.d;
    std::vector<RatClass> p;  // p[k], power sums; p[0] unused
    std::vector<RatClass> c;  // c[k], Chern classes; c[0] unused
    p.reserve(static_cast<std::size_t>(d) + 1);
    c.reserve(static_cast<std::size_t>(d) + 1);
    p.emplace_back(q);
    c.emplace_back(q);
    for (int k = 1; k <= d; ++k) {
        p.push_back(ch.homogeneous(k) * mpq_class(factorial(static_cast<unsigned long>(k))));
        RatClass rest = p[static_cast<std::size_t>(k)];
        for (int i = 1; i < k; ++i) {
            RatClass term = c[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
            if (i % 2 == 1) {
                rest -= term;
            } else {
                rest += term;
            }
        }
        const mpq_class scale = mpq_class(k % 2 == 1 ? 1 : -1, k);
        c.push_back(rest * scale);
    }
    RatClass total = RatClass::one(q);
    for (int k = 1; k <= d; ++k) total += c[static_cast<std::size_t>(k)];
    return make_chern_data(to_integer(total));
}

namespace {

IntClass linear(const RingSpec& ring, int j, const mpz_class& slope) {
    return IntClass::one(ring) + IntClass::generator(ring, j) * slope;
}

// ((1 + k x_j) / (1 - k x_j))^a
IntClass w_factor(const RingSpec& ring, int j, int k, std::int64_t a) {
    return pow_int(linear(ring, j, k), a) * pow_int(linear(ring, j, -k), -a);
}

} // namespace

ChernData total_chern_closed_form(const SacsCoefficients& coeffs) {
    validate(coeffs);
    const KSpec spec = coeffs.spec();
    const RingSpec ring = spec.ring();
    const int n = spec.n;

    IntClass sum(ring);
    for (int j = 1; j <= spec.m; ++j) sum += IntClass::generator(ring, j);
    IntClass total = pow_int(IntClass::one(ring) - sum, 2 * n + 1);

    for (const auto& [key, a] : coeffs.a) {
        if (a != 0) total *= w_factor(ring, key.first, key.second, a);
    }
    if (!coeffs.b.empty()) {
        const mpz_class scale = factorial(static_cast<unsigned long>(2 * n - 2));
        const IntClass top1 = IntClass::monomial(ring, 1, 2 * n - 1, scale);
        for (const auto& [j, b] : coeffs.b) {
            if (b == 0) continue;
            const IntClass c = IntClass::one(ring) + top1 - IntClass::monomial(ring, j, 2 * n - 1, scale);
            total *= pow_int(c, b);
        }
    }
    return make_chern_data(total);
}

mpz_class top_chern_of_sacs(const SacsCoefficients& coeffs) { return total_chern_closed_form(coeffs).top(); }

} // namespace acs
