#include "acs/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>
#include <thread>
#include <utility>

#include "acs/chern.hpp"

namespace acs {

namespace {

void validate(const SearchBox& box) {
    validate(box.spec());
    if (box.bound < 0) throw InvalidInput("search bound must be nonnegative, got " + std::to_string(box.bound));
}

bool lex_less(const WitnessRecord& x, const WitnessRecord& y) { return flatten(x.coeffs) < flatten(y.coeffs); }

std::uint64_t checked_count(const mpz_class& count, std::uint64_t ceiling, const char* what) {
    if (count > to_mpz(static_cast<std::int64_t>(std::min<std::uint64_t>(ceiling, INT64_MAX)))) {
        throw CeilingExceeded(std::string(what) + " " + count.get_str() + " exceeds ceiling " +
                              std::to_string(ceiling));
    }
    return count.get_ui();
}

// Odometer over [-bound, bound]^width, last coordinate fastest.
std::vector<std::int64_t> decode(std::uint64_t index, std::size_t width, int bound) {
    const std::uint64_t base = 2 * static_cast<std::uint64_t>(bound) + 1;
    std::vector<std::int64_t> out(width);
    for (std::size_t i = width; i-- > 0;) {
        out[i] = static_cast<std::int64_t>(index % base) - bound;
        index /= base;
    }
    return out;
}

std::vector<WitnessRecord> brute_force(const SearchBox& box, const SearchOptions& options) {
    const KSpec spec = box.spec();
    const std::size_t width = slots(spec).size();
    const std::uint64_t total = checked_count(candidate_count(box), options.brute_force_ceiling, "candidate count");
    const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));

    std::vector<std::vector<WitnessRecord>> partial(workers);
    auto scan = [&](unsigned w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        for (std::uint64_t i = begin; i < end; ++i) {
            WitnessRecord r = acs_criterion(unflatten(spec, decode(i, width, box.bound)));
            if (r.verdict) partial[w].push_back(std::move(r));
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    }

    std::vector<WitnessRecord> out;
    for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(out));
    std::stable_sort(out.begin(), out.end(), lex_less);
    return out;
}

using State = std::pair<mpz_class, std::int64_t>;  // (contribution sum, b sum)

std::int64_t b_part(const SearchBox& box, const LocalEntry& e) {
    if (box.n % 2 == 1) return 0;
    // generator 1 carries the sum s, the others their own b_j
    return e.local.back();
}

unsigned residue(const mpz_class& v) { return static_cast<unsigned>(mpz_fdiv_ui(v.get_mpz_t(), 4)); }

struct Suffix {
    std::set<State> states;
    std::array<bool, 4> residues{};
};

SacsCoefficients assemble(const SearchBox& box, const ContributionTable& table, const std::vector<std::size_t>& pick) {
    SacsCoefficients c = zero_coefficients(box.spec());
    const bool even = box.n % 2 == 0;
    for (int j = 1; j <= box.m; ++j) {
        const auto& local = table.per_generator[static_cast<std::size_t>(j - 1)][pick[static_cast<std::size_t>(j - 1)]].local;
        const int a_len = !even ? box.n : (j == 1 ? box.n : box.n - 1);
        for (int k = 1; k <= a_len; ++k) {
            if (local[static_cast<std::size_t>(k - 1)] != 0) c.a[{j, k}] = local[static_cast<std::size_t>(k - 1)];
        }
        if (even && j >= 2 && local.back() != 0) c.b[j] = local.back();
    }
    return c;
}

std::vector<WitnessRecord> decomposed(const SearchBox& box, const SearchOptions& options) {
    const ContributionTable table = contribution_table(box, options.table_ceiling);
    const ManifoldInvariants inv = invariants(box.m, box.n);
    const mpz_class chi = to_mpz(inv.euler);
    const auto m = static_cast<std::size_t>(box.m);

    // suffix[j] for 0-based generator j: reachable states of generators j..m-1.
    std::vector<Suffix> suffix(m + 1);
    suffix[m].states.insert({mpz_class(0), 0});
    suffix[m].residues[0] = true;
    std::uint64_t state_count = 1;
    for (std::size_t j = m; j-- > 1;) {
        for (const auto& e : table.per_generator[j]) {
            const std::int64_t b = b_part(box, e);
            for (const auto& [c, bs] : suffix[j + 1].states) {
                mpz_class sum = c + e.contribution;
                suffix[j].residues[residue(sum)] = true;
                suffix[j].states.insert({std::move(sum), bs + b});
            }
        }
        state_count += suffix[j].states.size();
        if (state_count > options.table_ceiling) {
            throw CeilingExceeded("decomposition state count exceeds ceiling " + std::to_string(options.table_ceiling));
        }
    }

    std::vector<WitnessRecord> out;
    std::vector<std::size_t> pick(m);
    // Depth-first over generators; remaining is the (contribution, b sum)
    // still to be covered by generators j..m-1.
    auto dfs = [&](auto&& self, std::size_t j, const mpz_class& rem_c, std::int64_t rem_b) -> void {
        if (j == m) {
            SacsCoefficients c = assemble(box, table, pick);
            out.push_back({std::move(c), chi, inv.euler, true});
            return;
        }
        const auto& entries = table.per_generator[j];
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            mpz_class next_c = rem_c - e.contribution;
            if (!suffix[j + 1].residues[residue(next_c)]) continue;
            const std::int64_t b = b_part(box, e);
            // generator 1's s must be matched by the b_j chosen later
            const std::int64_t next_b = j == 0 ? b : rem_b - b;
            if (!suffix[j + 1].states.contains({next_c, next_b})) continue;
            pick[j] = i;
            self(self, j + 1, next_c, next_b);
        }
    };
    dfs(dfs, 0, chi, 0);
    std::stable_sort(out.begin(), out.end(), lex_less);
    return out;
}

} // namespace

mpz_class candidate_count(const SearchBox& box) {
    validate(box);
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2UL * static_cast<unsigned long>(box.bound) + 1, slots(box.spec()).size());
    return r;
}

mpz_class local_contribution(const KSpec& spec, int j, const std::vector<std::int64_t>& local) {
    validate(spec);
    if (j < 1 || j > spec.m) throw IndexOutOfRange("generator " + std::to_string(j) + " outside 1.." + std::to_string(spec.m));
    const bool even = spec.n % 2 == 0;
    const int a_len = !even ? spec.n : (j == 1 ? spec.n : spec.n - 1);
    const std::size_t expected = static_cast<std::size_t>(a_len) + (even ? 1U : 0U);
    if (local.size() != expected) {
        throw ShapeError("generator " + std::to_string(j) + " expects " + std::to_string(expected) +
                         " local coefficients, got " + std::to_string(local.size()));
    }

    const RingSpec uni{1, 2 * spec.n, Domain::Integer};
    const IntClass one = IntClass::one(uni);
    const IntClass x = IntClass::generator(uni, 1);
    IntClass f = pow_int(one - x, 2 * spec.n + 1);
    for (int k = 1; k <= a_len; ++k) {
        const std::int64_t a = local[static_cast<std::size_t>(k - 1)];
        if (a == 0) continue;
        const IntClass kx = x * mpz_class(k);
        f *= pow_int(one + kx, a) * pow_int(one - kx, -a);
    }
    if (even && local.back() != 0) {
        mpz_class scale = factorial(static_cast<unsigned long>(2 * spec.n - 2));
        if (j != 1) scale = -scale;
        f *= pow_int(one + IntClass::monomial(uni, 1, 2 * spec.n - 1, scale), local.back());
    }
    return f.top();
}

ContributionTable contribution_table(const SearchBox& box, std::uint64_t ceiling) {
    validate(box);
    const KSpec spec = box.spec();
    const bool even = spec.n % 2 == 0;
    const mpz_class side = 2 * box.bound + 1;

    // Shapes first, so the ceiling is checked before any work.
    struct Shape {
        std::size_t width;
        int s_bound;  // range of the trailing b entry, or -1 if none
    };
    std::vector<Shape> shapes;
    mpz_class entries = 0;
    for (int j = 1; j <= spec.m; ++j) {
        Shape s{0, -1};
        if (!even) {
            s.width = static_cast<std::size_t>(spec.n);
        } else if (j == 1) {
            s = {static_cast<std::size_t>(spec.n) + 1, (spec.m - 1) * box.bound};
        } else {
            s = {static_cast<std::size_t>(spec.n), box.bound};
        }
        mpz_class size;
        const std::size_t a_width = s.s_bound < 0 ? s.width : s.width - 1;
        mpz_pow_ui(size.get_mpz_t(), side.get_mpz_t(), a_width);
        if (s.s_bound >= 0) size *= 2 * s.s_bound + 1;
        entries += size;
        shapes.push_back(s);
    }
    checked_count(entries, ceiling, "contribution table size");

    ContributionTable table{box, {}};
    for (int j = 1; j <= spec.m; ++j) {
        const Shape& s = shapes[static_cast<std::size_t>(j - 1)];
        std::vector<LocalEntry> rows;
        const std::size_t a_width = s.s_bound < 0 ? s.width : s.width - 1;
        mpz_class a_count_z;
        mpz_pow_ui(a_count_z.get_mpz_t(), side.get_mpz_t(), a_width);
        const std::uint64_t a_count = a_count_z.get_ui();
        for (std::uint64_t i = 0; i < a_count; ++i) {
            std::vector<std::int64_t> local = decode(i, a_width, box.bound);
            if (s.s_bound < 0) {
                mpz_class c = local_contribution(spec, j, local);
                rows.push_back({std::move(local), std::move(c)});
                continue;
            }
            local.push_back(0);
            for (std::int64_t t = -s.s_bound; t <= s.s_bound; ++t) {
                local.back() = t;
                rows.push_back({local, local_contribution(spec, j, local)});
            }
        }
        table.per_generator.push_back(std::move(rows));
    }
    return table;
}

SearchResult search_witnesses(const SearchBox& box, const SearchOptions& options) {
    validate(box);
    const auto start = std::chrono::steady_clock::now();
    SearchResult result;
    result.candidates = candidate_count(box);
    result.witnesses = options.mode == SearchMode::BruteForce ? brute_force(box, options) : decomposed(box, options);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace acs
