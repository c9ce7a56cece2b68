#include <doctest.h>

#include "acs/topology.hpp"
#include "oracles.hpp"

using namespace acs;

TEST_CASE("invariants") {
    const auto cp2 = invariants(1, 1);
    CHECK(cp2.euler == 3);
    CHECK(cp2.signature == 1);
    CHECK(cp2.dimension == 4);
    const auto s = invariants(3, 2);
    CHECK(s.euler == 11);
    CHECK(s.signature == 3);
    for (int u = 0; u < 5; ++u) {
        for (int n = 1; n <= 6; ++n) CHECK(invariants(2 * u + 1, n).euler == (2 * u + 1) * (2 * n - 1) + 2);
    }
    CHECK_THROWS_AS(invariants(0, 1), InvalidInput);
    CHECK_THROWS_AS(invariants(1, 0), InvalidInput);
    CHECK_THROWS_AS(invariants(-2, 3), InvalidInput);
}

TEST_CASE("hirzebruch congruence") {
    CHECK_FALSE(hirzebruch_check(2, 1));
    CHECK(hirzebruch_check(3, 2));
    for (int n = 1; n <= 8; ++n) CHECK(hirzebruch_check(1, n));
    for (int m = 1; m <= 20; ++m) {
        for (int n = 1; n <= 8; ++n) CHECK(hirzebruch_check(m, n) == (m % 2 == 1));
    }
}

TEST_CASE("acs criterion") {
    const auto r = acs_criterion(SacsCoefficients{3, 1, {{{1, 1}, 2}}, {}});
    CHECK(r.c_top == 5);
    CHECK(r.chi == 5);
    CHECK(r.verdict);

    const auto cp4 = acs_criterion(zero_coefficients({1, 2}));
    CHECK(cp4.c_top == 5);
    CHECK(cp4.verdict);

    const auto no = acs_criterion(SacsCoefficients{2, 1, {{{1, 1}, 2}, {{2, 1}, 2}}, {}});
    CHECK(no.c_top == -2);
    CHECK(no.chi == 4);
    CHECK_FALSE(no.verdict);
}

TEST_CASE("odd sum witness") {
    CHECK(odd_sum_witness(1, 3) == zero_coefficients({1, 3}));
    CHECK(odd_sum_witness(5, 3) == SacsCoefficients{5, 3, {{{1, 1}, 2}, {{2, 1}, 2}}, {}});
    for (int m = 1; m <= 15; m += 2) {
        for (int n = 1; n <= 8; ++n) {
            const auto r = acs_criterion(odd_sum_witness(m, n));
            CHECK(r.verdict);
            CHECK(r.c_top == m * (2 * n - 1) + 2);
        }
    }
    CHECK_THROWS_AS(odd_sum_witness(2, 1), InvalidInput);
    CHECK_THROWS_AS(odd_sum_witness(4, 3), InvalidInput);
}

TEST_CASE("top class congruence mod 4") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::int64_t> v(-4, 4);
    for (int trial = 0; trial < 80; ++trial) {
        const KSpec s{1 + trial % 6, 1 + trial % 5};
        std::vector<std::int64_t> values(slots(s).size());
        for (auto& x : values) x = v(rng);
        const auto r = acs_criterion(unflatten(s, values));
        const mpz_class want = s.n % 2 == 0 ? mpz_class(s.m) : mpz_class(-s.m);
        const mpz_class diff = r.c_top - want;
        CHECK(mpz_fdiv_ui(diff.get_mpz_t(), 4) == 0);
        if (r.verdict) CHECK(hirzebruch_check(s.m, s.n));
    }
}
