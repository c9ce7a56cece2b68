#pragma once

/**
 * @file ring.hpp
 * @brief Exact arithmetic in the truncated quotient ring
 *        L[g_1,...,g_m] / R_d(g_1,...,g_m),
 * where R_d is generated by g_i*g_j (i != j), g_i^d - g_j^d (i != j) and
 * g_j^(d+1). L is either the integers or the rationals.
 *
 * Every element is c0 + sum_{j, 1<=k<d} a_{j,k} g_j^k + t * omega with a single
 * shared top class omega = g_1^d = ... = g_m^d.
 *
 * Internally each generator keeps its own share of the top coefficient, i.e.
 * elements are carried as representatives in the wedge ring where the top
 * classes are not yet identified. The quotient map sums the shares. Equality,
 * serialization and coefficient_of only see the sum; restrict_to() exposes
 * the shares, which is what makes per-summand bookkeeping (contribution of
 * each connect summand to the top coefficient) exact.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "acs/errors.hpp"

namespace acs {

enum class Domain { Integer, Rational };

struct RingSpec {
    int m = 1;
    int d = 1;
    Domain domain = Domain::Integer;

    bool operator==(const RingSpec&) const = default;
};

/// Throws InvalidInput unless m >= 1 and d >= 1.
void validate(const RingSpec& spec);

std::string to_string(const RingSpec& spec);

inline mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<mpz_class> {
    static constexpr Domain domain = Domain::Integer;
    static bool is_unit(const mpz_class& c) { return c == 1 || c == -1; }
    static mpz_class inverse(const mpz_class& c) { return c; }
};

template <>
struct ScalarTraits<mpq_class> {
    static constexpr Domain domain = Domain::Rational;
    static bool is_unit(const mpq_class& c) { return sgn(c) != 0; }
    static mpq_class inverse(const mpq_class& c) { return mpq_class(1) / c; }
};

/// One nonzero coefficient of the lower band, the (j, k) entry of g_j^k.
template <class S>
struct Term {
    int j;
    int k;
    S value;

    bool operator==(const Term&) const = default;
};

template <class S>
class Truncated {
public:
    using Scalar = S;

    /// The zero element.
    explicit Truncated(RingSpec spec);

    static Truncated constant(RingSpec spec, S value);
    static Truncated one(RingSpec spec) { return constant(spec, S(1)); }

    /// The degree-one class g_j (1-based). For d = 1 this is a top class.
    static Truncated generator(RingSpec spec, int j);

    /// value * g_j^k for 0 <= k <= d. k = 0 gives a constant and k = d a top
    /// class attributed to generator j.
    static Truncated monomial(RingSpec spec, int j, int k, S value);

    /// Rebuilds an element from canonical data. The top coefficient is
    /// attributed to generator 1.
    static Truncated from_canonical(RingSpec spec, S c0, const std::vector<Term<S>>& lower, S top);

    const RingSpec& spec() const { return spec_; }
    const S& c0() const { return c0_; }
    S top() const;

    /// c0 for k = 0, the shared top coefficient for k = d, otherwise the
    /// (j, k) entry. j is ignored for k in {0, d}.
    S coefficient(int j, int k) const;

    /// Univariate series of degrees 0..d obtained by sending every other
    /// generator to zero. The degree-d entry is generator j's share of top.
    std::vector<S> restrict_to(int j) const;

    /// Nonzero lower-band entries ordered by (j, k).
    std::vector<Term<S>> lower_terms() const;

    /// Degree-k homogeneous component (0 <= k <= d).
    Truncated homogeneous(int k) const;

    bool is_zero() const;

    Truncated& operator+=(const Truncated& rhs);
    Truncated& operator-=(const Truncated& rhs);
    Truncated& operator*=(const Truncated& rhs);
    Truncated& operator*=(const S& scalar);

    friend Truncated operator+(Truncated a, const Truncated& b) { return a += b; }
    friend Truncated operator-(Truncated a, const Truncated& b) { return a -= b; }
    friend Truncated operator*(Truncated a, const Truncated& b) { return a *= b; }
    friend Truncated operator*(Truncated a, const S& s) { return a *= s; }
    friend Truncated operator*(const S& s, Truncated a) { return a *= s; }
    Truncated operator-() const;

    /// Equality in the quotient ring: top shares are compared by their sum.
    bool operator==(const Truncated& rhs) const;

    // Raw access to generator j's row (degrees 1..d), for substitution maps.
    const S& share(int j, int k) const { return rows_[index(j, k)]; }

private:
    void require_same(const Truncated& rhs) const;
    void check_generator(int j) const;
    std::size_t index(int j, int k) const {
        return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(spec_.d) +
               static_cast<std::size_t>(k - 1);
    }

    RingSpec spec_;
    S c0_;
    std::vector<S> rows_;  // m rows of d entries; entry d is the top share
};

using IntClass = Truncated<mpz_class>;
using RatClass = Truncated<mpq_class>;

/// a^e by repeated squaring. Negative e inverts first and needs a unit.
template <class S>
Truncated<S> pow_int(const Truncated<S>& a, std::int64_t e);

/// Two-sided inverse of a unit c0 + N via the finite geometric series in N.
template <class S>
Truncated<S> invert_unit(const Truncated<S>& a);

/// Ring homomorphism g_j -> images[j-1] into the ring of the images. Each
/// image must have zero constant term. Generator j's top share maps to
/// images[j-1]^d, so images supported on their own generator keep shares.
template <class S, class T>
Truncated<T> substitute(const Truncated<S>& a, const std::vector<Truncated<T>>& images);

RatClass to_rational(const IntClass& a);

/// Throws NonIntegral if c0, a lower coefficient or the top has a
/// denominator. Top shares are kept when all are integral, otherwise the top
/// is attributed to generator 1.
IntClass to_integer(const RatClass& a);

extern template class Truncated<mpz_class>;
extern template class Truncated<mpq_class>;

} // namespace acs
