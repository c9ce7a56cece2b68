#pragma once

#include <cstdint>

#include "acs/ktheory.hpp"

namespace acs {

/// Invariants of m # CP^{2n} with the orientation induced by the complex
/// structure of each summand.
struct ManifoldInvariants {
    int m;
    int n;
    int dimension;        // real dimension 4n
    std::int64_t euler;   // m(2n-1) + 2
    std::int64_t signature;  // m
};

ManifoldInvariants invariants(int m, int n);

/// Necessary condition for an almost complex structure on a closed
/// 4n-manifold: chi = (-1)^n sigma mod 4.
bool hirzebruch_check(int m, int n);

/// One evaluated family member: the top Chern class against the Euler
/// characteristic.
struct WitnessRecord {
    SacsCoefficients coeffs;
    mpz_class c_top;
    std::int64_t chi;
    bool verdict;
};

/// A stable almost complex structure comes from an almost complex structure
/// exactly when its top Chern class equals the Euler class.
WitnessRecord acs_criterion(const SacsCoefficients& coeffs);

/// For odd m = 2u + 1: a_j^1 = 2 for j = 1..u, all other coefficients zero.
/// Throws InvalidInput for even m.
SacsCoefficients odd_sum_witness(int m, int n);

} // namespace acs
