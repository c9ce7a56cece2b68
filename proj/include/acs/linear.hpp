#pragma once

// Small exact linear algebra over Q for lattice checks on ring elements.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "acs/ring.hpp"

namespace acs {

using RatVector = std::vector<mpq_class>;

/// Coordinates in the monomial basis: c0, then g_j^k for j ascending and
/// 1 <= k < d, then the top class.
RatVector coordinates(const IntClass& z);

/// Rank over Q of the given row vectors (all of equal length).
std::size_t rank(std::vector<RatVector> rows);

/// Solves sum_i x_i * basis[i] = target. Returns nullopt if target is not in
/// the span. Requires the basis to be linearly independent.
std::optional<RatVector> solve_in_span(const std::vector<RatVector>& basis, const RatVector& target);

} // namespace acs
