#include "acs/topology.hpp"

#include "acs/chern.hpp"

namespace acs {

ManifoldInvariants invariants(int m, int n) {
    if (m < 1 || n < 1) {
        throw InvalidInput("invariants need m >= 1 and n >= 1, got m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
    }
    const std::int64_t mm = m;
    const std::int64_t nn = n;
    return {m, n, 4 * n, mm * (2 * nn - 1) + 2, mm};
}

bool hirzebruch_check(int m, int n) {
    const ManifoldInvariants inv = invariants(m, n);
    const std::int64_t signed_sigma = n % 2 == 0 ? inv.signature : -inv.signature;
    return (inv.euler - signed_sigma) % 4 == 0;
}

WitnessRecord acs_criterion(const SacsCoefficients& coeffs) {
    validate(coeffs);
    const ManifoldInvariants inv = invariants(coeffs.m, coeffs.n);
    mpz_class top = top_chern_of_sacs(coeffs);
    const bool verdict = top == to_mpz(inv.euler);
    return {coeffs, std::move(top), inv.euler, verdict};
}

SacsCoefficients odd_sum_witness(int m, int n) {
    if (m < 1 || m % 2 == 0) {
        throw InvalidInput("witness construction needs odd m, got m=" + std::to_string(m));
    }
    SacsCoefficients c = zero_coefficients({m, n});
    const int u = (m - 1) / 2;
    for (int j = 1; j <= u; ++j) c.a[{j, 1}] = 2;
    return c;
}

} // namespace acs
