#include "acs/selftest.hpp"

#include <functional>
#include <random>

#include "acs/chern.hpp"
#include "acs/ktheory.hpp"
#include "acs/linear.hpp"

namespace acs {

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what();
        }
    }

    CheckResult done() && { return std::move(result_); }

private:
    CheckResult result_;
};

std::string at(int m, int n, int j, int k = -1) {
    std::string s = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " j=" + std::to_string(j);
    if (k >= 0) s += " k=" + std::to_string(k);
    return s;
}

CheckResult relation_sum_powers(const SelftestOptions& o) {
    Recorder r("(eta + t eta)^k = 2 e^{k-1} - f^{k-1}");
    for (int n = 1; n <= o.n_max; ++n) {
        for (int m = 1; m <= o.m_max; ++m) {
            const KSpec s{m, n};
            for (int j = 1; j <= m; ++j) {
                const IntClass e = eta(s, j);
                const IntClass sum = e + conjugate(e);
                for (int k = 1; k <= n; ++k) {
                    const IntClass rhs = basis_element(s, {BasisKind::E, j, k - 1}) * mpz_class(2) -
                                         basis_element(s, {BasisKind::F, j, k - 1});
                    r.check(pow_int(sum, k) == rhs, [&] { return at(m, n, j, k); });
                }
            }
        }
    }
    return std::move(r).done();
}

CheckResult relation_top(const SelftestOptions& o) {
    Recorder r("eta^{2n} = (eta + t eta)^n = 2 e^{n-1} - f^{n-1}");
    for (int n = 1; n <= o.n_max; ++n) {
        for (int m = 1; m <= o.m_max; ++m) {
            const KSpec s{m, n};
            for (int j = 1; j <= m; ++j) {
                const IntClass e = eta(s, j);
                const IntClass top = pow_int(e, 2 * n);
                const IntClass rhs = basis_element(s, {BasisKind::E, j, n - 1}) * mpz_class(2) -
                                     basis_element(s, {BasisKind::F, j, n - 1});
                r.check(top == pow_int(e + conjugate(e), n) && top == rhs &&
                            top == basis_element(s, {BasisKind::Omega, 1, 0}),
                        [&] { return at(m, n, j); });
            }
        }
    }
    return std::move(r).done();
}

CheckResult conjugation_series(const SelftestOptions& o) {
    Recorder r("t eta = -eta + eta^2 - ... + eta^{2n}");
    for (int n = 1; n <= o.n_max; ++n) {
        for (int m = 1; m <= o.m_max; ++m) {
            const KSpec s{m, n};
            for (int j = 1; j <= m; ++j) {
                IntClass series(s.ring());
                for (int i = 1; i <= 2 * n; ++i) {
                    series += IntClass::monomial(s.ring(), j, i, i % 2 == 0 ? 1 : -1);
                }
                r.check(conjugate(eta(s, j)) == series, [&] { return at(m, n, j); });
            }
        }
    }
    return std::move(r).done();
}

CheckResult line_bundle_inverse(const SelftestOptions& o) {
    Recorder r("H * t(H) = 1");
    for (int n = 1; n <= o.n_max; ++n) {
        for (int m = 1; m <= o.m_max; ++m) {
            const KSpec s{m, n};
            const IntClass one = IntClass::one(s.ring());
            for (int j = 1; j <= m; ++j) {
                const IntClass h = one + eta(s, j);
                r.check(h * conjugate(h) == one, [&] { return at(m, n, j); });
            }
        }
    }
    return std::move(r).done();
}

CheckResult e_difference(const SelftestOptions& o) {
    Recorder r("e_1^{n-1} - e_j^{n-1} = eta_1^{2n-1} - eta_j^{2n-1}");
    for (int n = 1; n <= o.n_max; ++n) {
        for (int m = 2; m <= o.m_max; ++m) {
            const KSpec s{m, n};
            const IntClass e1 = basis_element(s, {BasisKind::E, 1, n - 1});
            const IntClass p1 = pow_int(eta(s, 1), 2 * n - 1);
            for (int j = 2; j <= m; ++j) {
                const IntClass lhs = e1 - basis_element(s, {BasisKind::E, j, n - 1});
                r.check(lhs == p1 - pow_int(eta(s, j), 2 * n - 1), [&] { return at(m, n, j); });
            }
        }
    }
    return std::move(r).done();
}

CheckResult kernel_suite(const SelftestOptions& o) {
    Recorder r("kernel basis: m*n elements, phi = 0, independent");
    for (int n = 1; n <= o.kernel_n_max; ++n) {
        for (int m = 1; m <= o.kernel_m_max; ++m) {
            const KSpec s{m, n};
            const auto basis = kernel_basis(s);
            const auto where = [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); };
            r.check(basis.size() == static_cast<std::size_t>(m * n), where);
            std::vector<RatVector> rows;
            for (const auto& z : basis) {
                r.check(phi(z.value).is_zero(), [&] { return where() + " " + z.label; });
                rows.push_back(coordinates(z.value));
            }
            r.check(rank(rows) == basis.size(), where);
        }
    }
    return std::move(r).done();
}

SacsCoefficients random_coefficients(std::mt19937_64& rng, int m_max, int n_max, int bound) {
    std::uniform_int_distribution<int> pick_m(1, m_max);
    std::uniform_int_distribution<int> pick_n(1, n_max);
    std::uniform_int_distribution<std::int64_t> pick_v(-bound, bound);
    const KSpec spec{pick_m(rng), pick_n(rng)};
    std::vector<std::int64_t> values(slots(spec).size());
    for (auto& v : values) v = pick_v(rng);
    return unflatten(spec, values);
}

CheckResult oracle_equivalence(const SelftestOptions& o) {
    Recorder r("character route = product formula");
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.samples; ++i) {
        const SacsCoefficients c = random_coefficients(rng, 3, 4, 3);
        bool ok = false;
        try {
            ok = character_to_chern(chern_character(sacs_element(c))) == total_chern_closed_form(c);
        } catch (const NonIntegral&) {
            ok = false;
        }
        r.check(ok, [&] { return "sample " + std::to_string(i) + " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n); });
    }
    return std::move(r).done();
}

} // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
    return {relation_sum_powers(options), relation_top(options), conjugation_series(options),
            line_bundle_inverse(options), e_difference(options),  kernel_suite(options),
            oracle_equivalence(options)};
}

} // namespace acs
