#pragma once

#include <cstdint>
#include <vector>

#include "acs/topology.hpp"

namespace acs {

/// Every a_j^k and b_j ranges over [-bound, bound].
struct SearchBox {
    int m = 1;
    int n = 1;
    int bound = 0;

    KSpec spec() const { return {m, n}; }
};

enum class SearchMode { BruteForce, Decomposed };

struct SearchOptions {
    SearchMode mode = SearchMode::Decomposed;
    unsigned workers = 1;
    std::uint64_t brute_force_ceiling = 10'000'000;
    std::uint64_t table_ceiling = 1'000'000'000;
};

/// Total number of coefficient vectors in the box, (2B+1)^slots.
mpz_class candidate_count(const SearchBox& box);

/// Local coordinates of one connect summand.
///   generator j, n odd:        (a_j^1, ..., a_j^n)
///   generator 1, n even:       (a_1^1, ..., a_1^{n-1}, a_1^n, s) with s = sum_{j>=2} b_j
///   generator j >= 2, n even:  (a_j^1, ..., a_j^{n-1}, b_j)
struct LocalEntry {
    std::vector<std::int64_t> local;
    mpz_class contribution;
};

/// Per-summand contributions to the top Chern class. Summing one entry per
/// generator (with consistent b sums) gives the top Chern class of the
/// assembled coefficient vector.
struct ContributionTable {
    SearchBox box;
    std::vector<std::vector<LocalEntry>> per_generator;  // index j-1
};

/// Degree-2n coefficient of generator j's univariate factor
///   (1-x)^{2n+1} prod_k ((1+kx)/(1-kx))^{a^k} (1 +/- (2n-2)! x^{2n-1})^{s}
/// with + for generator 1 and - for the others.
mpz_class local_contribution(const KSpec& spec, int j, const std::vector<std::int64_t>& local);

ContributionTable contribution_table(const SearchBox& box, std::uint64_t ceiling = 1'000'000'000);

struct SearchResult {
    std::vector<WitnessRecord> witnesses;
    mpz_class candidates;
    double seconds = 0.0;
};

/// All coefficient vectors in the box whose top Chern class equals the Euler
/// characteristic, sorted lexicographically by flatten(coeffs). Both modes
/// return the same sequence for any worker count.
SearchResult search_witnesses(const SearchBox& box, const SearchOptions& options = {});

} // namespace acs
