#include "acs/ring.hpp"

#include <sstream>

namespace acs {

void validate(const RingSpec& spec) {
    if (spec.m < 1 || spec.d < 1) {
        throw InvalidInput("ring spec needs m >= 1 and d >= 1, got " + to_string(spec));
    }
}

std::string to_string(const RingSpec& spec) {
    std::ostringstream os;
    os << "(m=" << spec.m << ", d=" << spec.d << ", "
       << (spec.domain == Domain::Integer ? "Z" : "Q") << ")";
    return os.str();
}

template <class S>
Truncated<S>::Truncated(RingSpec spec)
    : spec_(spec), c0_(0), rows_(static_cast<std::size_t>(spec.m) * static_cast<std::size_t>(spec.d)) {
    validate(spec_);
    if (spec_.domain != ScalarTraits<S>::domain) {
        throw SpecMismatch("scalar type does not match ring domain " + to_string(spec_));
    }
    for (auto& v : rows_) v = 0;
}

template <class S>
Truncated<S> Truncated<S>::constant(RingSpec spec, S value) {
    Truncated r(spec);
    r.c0_ = std::move(value);
    return r;
}

template <class S>
Truncated<S> Truncated<S>::generator(RingSpec spec, int j) {
    return monomial(spec, j, 1, S(1));
}

template <class S>
Truncated<S> Truncated<S>::monomial(RingSpec spec, int j, int k, S value) {
    Truncated r(spec);
    r.check_generator(j);
    if (k < 0 || k > spec.d) {
        throw IndexOutOfRange("degree " + std::to_string(k) + " outside 0.." + std::to_string(spec.d));
    }
    if (k == 0) {
        r.c0_ = std::move(value);
    } else {
        r.rows_[r.index(j, k)] = std::move(value);
    }
    return r;
}

template <class S>
Truncated<S> Truncated<S>::from_canonical(RingSpec spec, S c0, const std::vector<Term<S>>& lower, S top) {
    Truncated r(spec);
    r.c0_ = std::move(c0);
    for (const auto& t : lower) {
        r.check_generator(t.j);
        if (t.k < 1 || t.k >= spec.d) {
            throw IndexOutOfRange("lower-band degree " + std::to_string(t.k) + " outside 1.." +
                                  std::to_string(spec.d - 1));
        }
        r.rows_[r.index(t.j, t.k)] += t.value;
    }
    r.rows_[r.index(1, spec.d)] = std::move(top);
    return r;
}

template <class S>
S Truncated<S>::top() const {
    S sum = 0;
    for (int j = 1; j <= spec_.m; ++j) sum += rows_[index(j, spec_.d)];
    return sum;
}

template <class S>
S Truncated<S>::coefficient(int j, int k) const {
    if (k < 0 || k > spec_.d) {
        throw IndexOutOfRange("degree " + std::to_string(k) + " outside 0.." + std::to_string(spec_.d));
    }
    if (k == 0) return c0_;
    if (k == spec_.d) return top();
    check_generator(j);
    return rows_[index(j, k)];
}

template <class S>
std::vector<S> Truncated<S>::restrict_to(int j) const {
    check_generator(j);
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(spec_.d) + 1);
    out.push_back(c0_);
    for (int k = 1; k <= spec_.d; ++k) out.push_back(rows_[index(j, k)]);
    return out;
}

template <class S>
std::vector<Term<S>> Truncated<S>::lower_terms() const {
    std::vector<Term<S>> out;
    for (int j = 1; j <= spec_.m; ++j) {
        for (int k = 1; k < spec_.d; ++k) {
            const S& v = rows_[index(j, k)];
            if (sgn(v) != 0) out.push_back({j, k, v});
        }
    }
    return out;
}

template <class S>
Truncated<S> Truncated<S>::homogeneous(int k) const {
    if (k < 0 || k > spec_.d) {
        throw IndexOutOfRange("degree " + std::to_string(k) + " outside 0.." + std::to_string(spec_.d));
    }
    Truncated r(spec_);
    if (k == 0) {
        r.c0_ = c0_;
        return r;
    }
    for (int j = 1; j <= spec_.m; ++j) r.rows_[index(j, k)] = rows_[index(j, k)];
    return r;
}

template <class S>
bool Truncated<S>::is_zero() const {
    if (sgn(c0_) != 0 || sgn(top()) != 0) return false;
    for (int j = 1; j <= spec_.m; ++j) {
        for (int k = 1; k < spec_.d; ++k) {
            if (sgn(rows_[index(j, k)]) != 0) return false;
        }
    }
    return true;
}

template <class S>
Truncated<S>& Truncated<S>::operator+=(const Truncated& rhs) {
    require_same(rhs);
    c0_ += rhs.c0_;
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] += rhs.rows_[i];
    return *this;
}

template <class S>
Truncated<S>& Truncated<S>::operator-=(const Truncated& rhs) {
    require_same(rhs);
    c0_ -= rhs.c0_;
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] -= rhs.rows_[i];
    return *this;
}

template <class S>
Truncated<S>& Truncated<S>::operator*=(const Truncated& rhs) {
    require_same(rhs);
    const int d = spec_.d;
    std::vector<S> out(rows_.size());
    S tmp;
    for (int j = 1; j <= spec_.m; ++j) {
        const std::size_t base = index(j, 1);
        for (int k = 1; k <= d; ++k) {
            S& acc = out[base + static_cast<std::size_t>(k - 1)];
            acc = c0_ * rhs.rows_[base + static_cast<std::size_t>(k - 1)];
            tmp = rhs.c0_ * rows_[base + static_cast<std::size_t>(k - 1)];
            acc += tmp;
            // g_j^p * g_j^q with p + q = k, both positive; beyond d is zero.
            for (int p = 1; p < k; ++p) {
                const S& lhs_p = rows_[base + static_cast<std::size_t>(p - 1)];
                if (sgn(lhs_p) == 0) continue;
                tmp = lhs_p * rhs.rows_[base + static_cast<std::size_t>(k - p - 1)];
                acc += tmp;
            }
        }
    }
    c0_ *= rhs.c0_;
    rows_ = std::move(out);
    return *this;
}

template <class S>
Truncated<S>& Truncated<S>::operator*=(const S& scalar) {
    c0_ *= scalar;
    for (auto& v : rows_) v *= scalar;
    return *this;
}

template <class S>
Truncated<S> Truncated<S>::operator-() const {
    Truncated r(*this);
    r.c0_ = -r.c0_;
    for (auto& v : r.rows_) v = -v;
    return r;
}

template <class S>
bool Truncated<S>::operator==(const Truncated& rhs) const {
    if (spec_ != rhs.spec_) return false;
    if (c0_ != rhs.c0_) return false;
    for (int j = 1; j <= spec_.m; ++j) {
        for (int k = 1; k < spec_.d; ++k) {
            if (rows_[index(j, k)] != rhs.rows_[index(j, k)]) return false;
        }
    }
    return top() == rhs.top();
}

template <class S>
void Truncated<S>::require_same(const Truncated& rhs) const {
    if (spec_ != rhs.spec_) {
        throw SpecMismatch("ring mismatch: " + to_string(spec_) + " vs " + to_string(rhs.spec_));
    }
}

template <class S>
void Truncated<S>::check_generator(int j) const {
    if (j < 1 || j > spec_.m) {
        throw IndexOutOfRange("generator index " + std::to_string(j) + " outside 1.." +
                              std::to_string(spec_.m));
    }
}

template <class S>
Truncated<S> invert_unit(const Truncated<S>& a) {
    if (!ScalarTraits<S>::is_unit(a.c0())) {
        throw NotAUnit("constant term " + a.c0().get_str() + " is not invertible in " +
                       to_string(a.spec()));
    }
    // a = c (1 + u) with u = c^-1 N nilpotent, u^(d+1) = 0.
    // a^-1 = c^-1 (1 - u + u^2 - ... + (-u)^d).
    const S inv_c0 = ScalarTraits<S>::inverse(a.c0());
    Truncated<S> neg_u = a - Truncated<S>::constant(a.spec(), a.c0());
    neg_u *= S(-inv_c0);
    Truncated<S> sum = Truncated<S>::one(a.spec());
    Truncated<S> power = Truncated<S>::one(a.spec());
    for (int i = 1; i <= a.spec().d; ++i) {
        power *= neg_u;
        if (power.is_zero()) break;
        sum += power;
    }
    sum *= inv_c0;
    return sum;
}

template <class S>
Truncated<S> pow_int(const Truncated<S>& a, std::int64_t e) {
    Truncated<S> base = e < 0 ? invert_unit(a) : a;
    // Magnitude as unsigned so that INT64_MIN is handled.
    std::uint64_t k = e < 0 ? ~static_cast<std::uint64_t>(e) + 1 : static_cast<std::uint64_t>(e);
    Truncated<S> result = Truncated<S>::one(a.spec());
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k != 0) base *= base;
    }
    return result;
}

template <class S, class T>
Truncated<T> substitute(const Truncated<S>& a, const std::vector<Truncated<T>>& images) {
    const RingSpec& src = a.spec();
    if (images.size() != static_cast<std::size_t>(src.m)) {
        throw SpecMismatch("substitution needs one image per generator");
    }
    const RingSpec& dst = images.front().spec();
    if (dst.m != src.m || dst.d != src.d) {
        throw SpecMismatch("substitution target " + to_string(dst) + " incompatible with " +
                           to_string(src));
    }
    Truncated<T> result = Truncated<T>::constant(dst, T(a.c0()));
    for (int j = 1; j <= src.m; ++j) {
        const Truncated<T>& img = images[static_cast<std::size_t>(j - 1)];
        if (img.spec() != dst) throw SpecMismatch("substitution images live in different rings");
        if (sgn(img.c0()) != 0) throw InvalidInput("substitution image must have zero constant term");
        Truncated<T> power = img;
        for (int k = 1; k <= src.d; ++k) {
            if (k > 1) power *= img;
            const S& c = a.share(j, k);
            if (sgn(c) != 0) result += power * T(c);
        }
    }
    return result;
}

RatClass to_rational(const IntClass& a) {
    RingSpec spec = a.spec();
    spec.domain = Domain::Rational;
    std::vector<RatClass> images;
    images.reserve(static_cast<std::size_t>(spec.m));
    for (int j = 1; j <= spec.m; ++j) images.push_back(RatClass::generator(spec, j));
    return substitute(a, images);
}

namespace {

mpz_class integral_or_throw(const mpq_class& q, const char* where) {
    if (q.get_den() != 1) {
        throw NonIntegral(std::string("non-integral ") + where + " coefficient " + q.get_str());
    }
    return q.get_num();
}

} // namespace

IntClass to_integer(const RatClass& a) {
    RingSpec spec = a.spec();
    spec.domain = Domain::Integer;
    std::vector<Term<mpz_class>> lower;
    for (const auto& t : a.lower_terms()) lower.push_back({t.j, t.k, integral_or_throw(t.value, "lower")});
    mpz_class top = integral_or_throw(a.top(), "top");
    mpz_class c0 = integral_or_throw(a.c0(), "constant");

    bool shares_integral = true;
    for (int j = 1; j <= spec.m; ++j) shares_integral = shares_integral && a.share(j, spec.d).get_den() == 1;
    if (!shares_integral) return IntClass::from_canonical(spec, c0, lower, top);

    IntClass r = IntClass::from_canonical(spec, c0, lower, 0);
    for (int j = 1; j <= spec.m; ++j) {
        r += IntClass::monomial(spec, j, spec.d, a.share(j, spec.d).get_num());
    }
    return r;
}

template class Truncated<mpz_class>;
template class Truncated<mpq_class>;

template IntClass pow_int(const IntClass&, std::int64_t);
template RatClass pow_int(const RatClass&, std::int64_t);
template IntClass invert_unit(const IntClass&);
template RatClass invert_unit(const RatClass&);
template IntClass substitute(const IntClass&, const std::vector<IntClass>&);
template RatClass substitute(const IntClass&, const std::vector<RatClass>&);
template RatClass substitute(const RatClass&, const std::vector<RatClass>&);

} // namespace acs
