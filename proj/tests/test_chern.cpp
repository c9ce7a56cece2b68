#include <doctest.h>

#include "acs/chern.hpp"
#include "oracles.hpp"

using namespace acs;

namespace {

RatClass rat_mono(const RingSpec& q, int j, int k, const mpq_class& v) { return RatClass::monomial(q, j, k, v); }

RingSpec rational(const KSpec& s) {
    RingSpec q = s.ring();
    q.domain = Domain::Rational;
    return q;
}

SacsCoefficients random_coeffs(std::mt19937_64& rng, const KSpec& s, int range) {
    std::uniform_int_distribution<std::int64_t> v(-range, range);
    std::vector<std::int64_t> values(slots(s).size());
    for (auto& x : values) x = v(rng);
    return unflatten(s, values);
}

void check_against_oracle(const ChernData& c, const SacsCoefficients& coeffs) {
    const auto series = oracle::summand_series(coeffs);
    const int d = 2 * coeffs.n;
    for (int k = 1; k < d; ++k) {
        for (int j = 1; j <= coeffs.m; ++j) {
            CHECK(mpq_class(c.by_degree[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)]) ==
                  series[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k)]);
        }
    }
    CHECK(mpq_class(c.top()) == oracle::summand_top(coeffs));
}

} // namespace

TEST_CASE("chern character") {
    const KSpec s1{1, 1};
    const RingSpec q1 = rational(s1);
    CHECK(chern_character(eta(s1, 1)) == rat_mono(q1, 1, 1, 1) + rat_mono(q1, 1, 2, mpq_class(1, 2)));

    for (int n = 1; n <= 5; ++n) {
        const KSpec s{3, n};
        const RingSpec q = rational(s);
        for (int j = 1; j <= 3; ++j) {
            CHECK(chern_character(pow_int(eta(s, j), 2 * n)) == rat_mono(q, j, 2 * n, 1));
            if (j >= 2) {
                const auto diff = pow_int(eta(s, 1), 2 * n - 1) - pow_int(eta(s, j), 2 * n - 1);
                CHECK(chern_character(diff) == rat_mono(q, 1, 2 * n - 1, 1) - rat_mono(q, j, 2 * n - 1, 1));
            }
        }
        CHECK(chern_character(IntClass::constant(s.ring(), 7)) == RatClass::constant(q, 7));
    }
}

TEST_CASE("character to chern") {
    const KSpec s1{1, 1};
    const RingSpec q1 = rational(s1);
    const auto line = character_to_chern(rat_mono(q1, 1, 1, 1) + rat_mono(q1, 1, 2, mpq_class(1, 2)));
    CHECK(line.total == IntClass::one(s1.ring()) + eta(s1, 1));
    CHECK(line.by_degree[0][0] == 1);
    CHECK(line.top() == 0);

    for (int n = 2; n <= 6; ++n) {
        const KSpec s{2, n};
        const RingSpec q = rational(s);
        const auto c = character_to_chern(rat_mono(q, 1, 2 * n - 1, 1) - rat_mono(q, 2, 2 * n - 1, 1));
        const mpz_class f = factorial(static_cast<unsigned long>(2 * n - 2));
        CHECK(c.total == IntClass::one(s.ring()) + IntClass::monomial(s.ring(), 1, 2 * n - 1, f) -
                             IntClass::monomial(s.ring(), 2, 2 * n - 1, f));
    }

    const KSpec s{3, 2};
    CHECK(character_to_chern(RatClass(rational(s))).total == IntClass::one(s.ring()));
}

TEST_CASE("line bundle convention") {
    for (int n = 1; n <= 6; ++n) {
        for (int m = 1; m <= 3; ++m) {
            const KSpec s{m, n};
            for (int j = 1; j <= m; ++j) {
                const auto one = IntClass::one(s.ring());
                CHECK(character_to_chern(chern_character(eta(s, j))).total == one + eta(s, j));
                CHECK(character_to_chern(chern_character(conjugate(eta(s, j)))).total == one - eta(s, j));
            }
        }
    }
}

TEST_CASE("character to chern errors") {
    const KSpec s{1, 1};
    const RingSpec q = rational(s);
    CHECK_THROWS_AS(character_to_chern(rat_mono(q, 1, 1, mpq_class(1, 2))), NonIntegral);
    CHECK_THROWS_AS(character_to_chern(RatClass::constant(q, 1)), InvalidInput);
    CHECK_THROWS_AS(make_chern_data(IntClass::constant(s.ring(), 2)), InvalidInput);
}

TEST_CASE("closed form") {
    for (int n = 1; n <= 8; ++n) {
        const auto c = total_chern_closed_form(zero_coefficients({1, n}));
        CHECK(c.top() == oracle::binomial(2 * n + 1, 2 * n));
        CHECK(c.top() == 2 * n + 1);
    }
    SacsCoefficients prop{3, 1, {{{1, 1}, 2}}, {}};
    CHECK(top_chern_of_sacs(prop) == 5);

    // one summand with a^1 = 2: (1-x)^{2n-1} (1+x)^2 has top coefficient 2n - 3
    for (int n = 1; n <= 8; ++n) {
        SacsCoefficients one{1, n, {{{1, 1}, 2}}, {}};
        CHECK(top_chern_of_sacs(one) == 2 * n - 3);
        const auto poly = oracle::mul(oracle::binomial_series(-1, 2 * n - 1, 2 * n), oracle::binomial_series(1, 2, 2 * n), 2 * n);
        CHECK(poly.back() == 2 * n - 3);
    }

    CHECK(top_chern_of_sacs(zero_coefficients({1, 2})) == 5);
    CHECK(top_chern_of_sacs(SacsCoefficients{3, 2, {{{1, 1}, 2}}, {}}) == 11);
    CHECK(top_chern_of_sacs(SacsCoefficients{2, 1, {{{1, 1}, 1}, {{2, 1}, 1}}, {}}) == -2);

    CHECK_THROWS_AS(total_chern_closed_form(SacsCoefficients{2, 1, {}, {{2, 1}}}), ShapeError);
}

TEST_CASE("closed form matches the summand oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const KSpec s{1 + trial % 4, 1 + trial % 5};
        const auto coeffs = random_coeffs(rng, s, 3);
        check_against_oracle(total_chern_closed_form(coeffs), coeffs);
    }
}

TEST_CASE("character route matches closed form") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const KSpec s{1 + trial % 3, 1 + trial % 4};
        const auto coeffs = random_coeffs(rng, s, 3);
        const auto via_character = character_to_chern(chern_character(sacs_element(coeffs)));
        const auto closed = total_chern_closed_form(coeffs);
        CHECK(via_character == closed);
        CHECK(via_character.by_degree == closed.by_degree);
    }
}

TEST_CASE("whitney multiplicativity") {
    for (int n = 1; n <= 4; ++n) {
        const KSpec s{2, n};
        const auto w11 = basis_element(s, {BasisKind::W, 1, 1});
        const auto w2n = basis_element(s, {BasisKind::W, 2, n});
        const auto c = [](const IntClass& z) { return character_to_chern(chern_character(z)).total; };
        CHECK(c(w11 + w2n) == c(w11) * c(w2n));
        CHECK(c(w11 * mpz_class(3)) == pow_int(c(w11), 3));
        // the W factor is (1 + kx) / (1 - kx)
        const auto x = IntClass::generator(s.ring(), 2);
        const auto one = IntClass::one(s.ring());
        CHECK(c(w2n) == (one + x * mpz_class(n)) * invert_unit(one - x * mpz_class(n)));
    }
}

TEST_CASE("top class is the sum of summand tops") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const KSpec s{2 + trial % 3, 1 + trial % 4};
        const auto c = total_chern_closed_form(random_coeffs(rng, s, 2));
        mpz_class sum = 0;
        for (int j = 1; j <= s.m; ++j) sum += c.total.restrict_to(j).back();
        CHECK(sum == c.top());
    }
}
