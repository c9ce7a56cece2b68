#include <doctest.h>

#include <algorithm>

#include "acs/chern.hpp"
#include "acs/search.hpp"
#include "oracles.hpp"

using namespace acs;

namespace {

std::vector<std::vector<std::int64_t>> flat(const SearchResult& r) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& w : r.witnesses) out.push_back(flatten(w.coeffs));
    return out;
}

SearchOptions with(SearchMode mode, unsigned workers = 1) {
    SearchOptions o;
    o.mode = mode;
    o.workers = workers;
    return o;
}

} // namespace

TEST_CASE("summand contributions") {
    const KSpec s1{1, 1};
    CHECK(local_contribution(s1, 1, {0}) == 3);
    CHECK(local_contribution(s1, 1, {1}) == -1);
    CHECK(local_contribution(s1, 1, {2}) == -1);
    CHECK(local_contribution(s1, 1, {-1}) == 11);
    CHECK(local_contribution(s1, 1, {-2}) == 23);

    const KSpec s2{2, 2};
    CHECK(local_contribution(s2, 1, {2, 0, 0}) == 1);
    CHECK(local_contribution(s2, 1, {0, 0, 0}) == 5);
    CHECK(local_contribution(s2, 2, {0, 0}) == 5);
    CHECK(local_contribution(s2, 2, {2, 0}) == 1);

    CHECK_THROWS_AS(local_contribution(s2, 2, {0, 0, 0}), ShapeError);
    CHECK_THROWS_AS(local_contribution(s2, 3, {0, 0}), IndexOutOfRange);

    const auto table = contribution_table({3, 1, 2});
    REQUIRE(table.per_generator.size() == 3);
    CHECK(table.per_generator[0].size() == 5);
    for (const auto& e : table.per_generator[0]) {
        SacsCoefficients c{1, 1, {{{1, 1}, e.local[0]}}, {}};
        CHECK(e.contribution == top_chern_of_sacs(c));
    }
    CHECK_THROWS_AS(contribution_table({3, 4, 3}, 100), CeilingExceeded);
}

TEST_CASE("contributions add up to the top class") {
    std::mt19937_64 rng(59);
    for (int n = 1; n <= 4; ++n) {
        const SearchBox box{3, n, 1};
        const auto table = contribution_table(box);
        for (int trial = 0; trial < 25; ++trial) {
            mpz_class sum = 0;
            SacsCoefficients c = zero_coefficients(box.spec());
            std::int64_t s = 0;
            for (int j = 3; j >= 1; --j) {
                const auto& rows = table.per_generator[static_cast<std::size_t>(j - 1)];
                const LocalEntry* pick = nullptr;
                if (j == 1 && n % 2 == 0) {
                    // generator 1's trailing entry must equal the b sum
                    std::vector<const LocalEntry*> ok;
                    for (const auto& e : rows) {
                        if (e.local.back() == s) ok.push_back(&e);
                    }
                    pick = ok[rng() % ok.size()];
                } else {
                    pick = &rows[rng() % rows.size()];
                }
                sum += pick->contribution;
                const int a_len = n % 2 == 1 ? n : (j == 1 ? n : n - 1);
                for (int k = 1; k <= a_len; ++k) c.a[{j, k}] = pick->local[static_cast<std::size_t>(k - 1)];
                if (n % 2 == 0 && j >= 2) {
                    c.b[j] = pick->local.back();
                    s += pick->local.back();
                }
            }
            CHECK(sum == top_chern_of_sacs(c));
            CHECK(mpq_class(sum) == oracle::summand_top(c));
        }
    }
}

TEST_CASE("fixed boxes") {
    for (auto mode : {SearchMode::BruteForce, SearchMode::Decomposed}) {
        const auto r = search_witnesses({3, 1, 2}, with(mode));
        const std::vector<std::vector<std::int64_t>> want{{0, 0, 1}, {0, 0, 2}, {0, 1, 0},
                                                          {0, 2, 0}, {1, 0, 0}, {2, 0, 0}};
        CHECK(flat(r) == want);
        CHECK(r.candidates == 125);
        for (const auto& w : r.witnesses) {
            CHECK(w.c_top == 5);
            CHECK(w.chi == 5);
            CHECK(w.verdict);
        }
        CHECK(search_witnesses({2, 1, 3}, with(mode)).witnesses.empty());
        CHECK(search_witnesses({2, 2, 2}, with(mode)).witnesses.empty());
    }
}

TEST_CASE("boxes around the odd sum witness") {
    for (int m = 1; m <= 5; m += 2) {
        for (int n = 1; n <= 3; ++n) {
            if (candidate_count({m, n, 2}) > 2'000'000) continue;
            const auto w = flatten(odd_sum_witness(m, n));
            const auto got = flat(search_witnesses({m, n, 2}));
            CHECK(std::find(got.begin(), got.end(), w) != got.end());
        }
    }
}

TEST_CASE("modes agree") {
    const std::vector<SearchBox> boxes{{1, 1, 4}, {1, 2, 3}, {2, 2, 1}, {3, 2, 1}, {2, 3, 1}, {3, 1, 3},
                                       {4, 1, 2}, {1, 4, 1}, {2, 4, 1}, {3, 3, 1}, {5, 1, 1}, {4, 2, 1}};
    for (const auto& box : boxes) {
        CAPTURE(box.m);
        CAPTURE(box.n);
        CAPTURE(box.bound);
        const auto brute = search_witnesses(box, with(SearchMode::BruteForce, 4));
        const auto dp = search_witnesses(box, with(SearchMode::Decomposed));
        CHECK(flat(brute) == flat(dp));
        for (const auto& w : dp.witnesses) {
            const auto again = acs_criterion(w.coeffs);
            CHECK(again.verdict);
            CHECK(again.c_top == w.c_top);
        }
    }
}

TEST_CASE("worker count does not change results") {
    const SearchBox box{3, 2, 1};
    const auto one = flat(search_witnesses(box, with(SearchMode::BruteForce, 1)));
    for (unsigned w : {2U, 3U, 8U}) CHECK(flat(search_witnesses(box, with(SearchMode::BruteForce, w))) == one);
}

TEST_CASE("search limits") {
    SearchOptions tight = with(SearchMode::BruteForce);
    tight.brute_force_ceiling = 100;
    CHECK_THROWS_AS(search_witnesses({3, 1, 2}, tight), CeilingExceeded);
    SearchOptions tiny = with(SearchMode::Decomposed);
    tiny.table_ceiling = 3;
    CHECK_THROWS_AS(search_witnesses({3, 1, 2}, tiny), CeilingExceeded);
    CHECK_THROWS_AS(search_witnesses({3, 1, -1}), InvalidInput);
    CHECK_THROWS_AS(search_witnesses({0, 1, 1}), InvalidInput);
    CHECK(candidate_count({3, 2, 1}) == 729);
}
