#pragma once

#include <cstddef>
#include <vector>

#include "agisos/rational.hpp"

namespace agisos::detail {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Fraction-free (Bareiss) elimination. Returns the pivot column indices of
/// the row echelon form; their count is the rank.
std::vector<std::size_t> pivot_columns(IntMatrix m);

/// Bareiss determinant of a square matrix.
BigInt determinant(IntMatrix m);

/// Classical adjugate, adj(m) * m = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace agisos::detail
