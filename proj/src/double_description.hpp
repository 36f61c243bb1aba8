#pragma once

#include <vector>

#include "decostab/rational.hpp"

namespace decostab::detail {

using IntegerVector = std::vector<Integer>;

/// Rank of a list of integer rows.
std::size_t matrix_rank(const std::vector<IntegerVector>& rows, std::size_t dim);

/// Extreme rays of the pointed cone {x in Q^dim : row . x <= 0 for all rows},
/// each scaled to its primitive integral representative. Throws NotPointed
/// when the cone contains a line. The zero cone yields no rays.
std::vector<IntegerVector> extreme_rays(std::vector<IntegerVector> rows, std::size_t dim);

}  // namespace decostab::detail
