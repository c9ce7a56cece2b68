#include "acs/linear.hpp"

#include <utility>

namespace acs {

RatVector coordinates(const IntClass& z) {
    const RingSpec& s = z.spec();
    RatVector v;
    v.reserve(static_cast<std::size_t>(s.m * (s.d - 1) + 2));
    v.emplace_back(z.c0());
    for (int j = 1; j <= s.m; ++j) {
        for (int k = 1; k < s.d; ++k) v.emplace_back(z.coefficient(j, k));
    }
    v.emplace_back(z.top());
    return v;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RatVector>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const mpq_class inv = mpq_class(1) / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const mpq_class f = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(std::vector<RatVector> rows) { return row_reduce(rows).size(); }

std::optional<RatVector> solve_in_span(const std::vector<RatVector>& basis, const RatVector& target) {
    // Augmented system A^T x = target, one row per coordinate.
    const std::size_t n = basis.size();
    std::vector<RatVector> rows(target.size(), RatVector(n + 1));
    for (std::size_t i = 0; i < target.size(); ++i) {
        for (std::size_t b = 0; b < n; ++b) rows[i][b] = basis[b].at(i);
        rows[i][n] = target[i];
    }
    const auto pivots = row_reduce(rows);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    if (pivots.size() != n) throw InvalidInput("solve_in_span needs a linearly independent basis");
    RatVector x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][n];
    return x;
}

} // namespace acs
