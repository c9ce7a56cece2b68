#pragma once

// K-theory of m # CP^{2n}: Z[eta_1..eta_m] / R_{2n}, carried on IntClass with
// d = 2n. eta_j = H_j - 1 is the reduced class of the j-th pulled-back
// tautological line bundle, omega = eta_j^{2n} the shared top class.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acs/ring.hpp"

namespace acs {

struct KSpec {
    int m = 1;
    int n = 1;

    RingSpec ring() const { return {m, 2 * n, Domain::Integer}; }
    bool operator==(const KSpec&) const = default;
};

void validate(const KSpec& spec);

/// Recovers (m, n) from a ring with even d. Throws InvalidInput otherwise.
KSpec kspec_of(const RingSpec& ring);

enum class BasisKind { EtaPow, HPow, E, F, W, Omega };

struct BasisKey {
    BasisKind kind = BasisKind::EtaPow;
    int j = 1;
    int k = 1;
};

std::string to_string(const BasisKey& key);

IntClass eta(const KSpec& spec, int j);

/// Complex conjugation t: eta_j -> -eta_j / (1 + eta_j). Involutive ring
/// endomorphism fixing constants.
IntClass conjugate(const IntClass& z);

/// eta_j^k, H_j^k = (1 + eta_j)^k, e_j^k = eta_j (eta_j + t eta_j)^k,
/// f_j^k = (eta_j - t eta_j)(eta_j + t eta_j)^k, w_j^k = H_j^k - H_j^-k, omega.
IntClass basis_element(const KSpec& spec, const BasisKey& key);

/// Complex lift (2n+1) * sum_j t(eta_j) of the stable tangent bundle.
IntClass stable_tangent(const KSpec& spec);

/// phi = 1 + t, the complexification of the realification.
IntClass phi(const IntClass& z);

struct KernelElement {
    std::string label;
    IntClass value;
};

/// Free generating set of ker(r) on the reduced K-group, m*n elements.
///   n odd:  w_j^k, 1 <= k <= n, ordered by (j, k).
///   n even: w_j^k, 1 <= k <= n-1, ordered by (j, k); then
///           e_1^{n-1} - e_j^{n-1} for j = 2..m; then 2 e_1^{n-1} - omega.
std::vector<KernelElement> kernel_basis(const KSpec& spec);

/// Integer parameters of one stable almost complex structure
///   y = (2n+1) sum_j t(eta_j) + sum a_j^k w_j^k + sum_j b_j (eta_1^{2n-1} - eta_j^{2n-1}).
/// For n odd: a_j^k with 1 <= k <= n and no b.
/// For n even: a_j^k with 1 <= k <= n-1, the extra a_1^n, and b_j for j >= 2.
/// Absent entries are zero.
struct SacsCoefficients {
    int m = 1;
    int n = 1;
    std::map<std::pair<int, int>, std::int64_t> a;
    std::map<int, std::int64_t> b;

    KSpec spec() const { return {m, n}; }
    std::int64_t a_at(int j, int k) const;
    std::int64_t b_at(int j) const;

    /// Absent and explicit zero entries compare equal.
    bool operator==(const SacsCoefficients& rhs) const;
};

/// Throws ShapeError if a key lies outside the family for the parity of n.
void validate(const SacsCoefficients& coeffs);

/// One free integer parameter of the family.
struct Slot {
    enum class Kind { A, B } kind;
    int j;
    int k;  // unused for B
};

/// Parameter slots in serialization order: a by (j, k), then b by j.
std::vector<Slot> slots(const KSpec& spec);

std::vector<std::int64_t> flatten(const SacsCoefficients& coeffs);
SacsCoefficients unflatten(const KSpec& spec, const std::vector<std::int64_t>& values);

SacsCoefficients zero_coefficients(const KSpec& spec);

IntClass sacs_element(const SacsCoefficients& coeffs);

} // namespace acs
