#pragma once

#include <vector>

#include "acs/ktheory.hpp"
#include "acs/ring.hpp"

namespace acs {

/// Total Chern class of a virtual bundle over m # CP^{2n}, in the integral
/// cohomology ring Z[x_1..x_m] / R_{2n}.
struct ChernData {
    KSpec spec;
    IntClass total;
    /// by_degree[k-1] holds c_k: one integer per generator for k < 2n and the
    /// single top coefficient for k = 2n.
    std::vector<std::vector<mpz_class>> by_degree;

    const mpz_class& top() const { return by_degree.back().front(); }
    bool operator==(const ChernData& rhs) const { return spec == rhs.spec && total == rhs.total; }
};

/// Wraps a total class. Throws InvalidInput unless c0 = 1 and d is even.
ChernData make_chern_data(const IntClass& total);

/// Chern character of a K-class: eta_j -> exp(x_j) - 1, exact over Q.
RatClass chern_character(const IntClass& z);

/// Recovers the Chern classes from a reduced character via Newton's
/// identities, with the convention
///   p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-2} c_{k-1} p_1 + (-1)^{k-1} k c_k,
/// where p_k = k! ch_k. Throws NonIntegral if some c_k is not integral.
ChernData character_to_chern(const RatClass& ch);

/// Product formula for the family member selected by coeffs:
///   (1 - sum x_j)^{2n+1} prod ((1 + k x_j) / (1 - k x_j))^{a_j^k}
///   * prod_{j>=2} (1 + (2n-2)! (x_1^{2n-1} - x_j^{2n-1}))^{b_j}
/// evaluated exactly in the integral ring.
ChernData total_chern_closed_form(const SacsCoefficients& coeffs);

mpz_class top_chern_of_sacs(const SacsCoefficients& coeffs);

mpz_class factorial(unsigned long k);

} // namespace acs
