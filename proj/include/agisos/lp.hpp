#pragma once

#include <cstddef>
#include <vector>

#include "agisos/rational.hpp"

namespace agisos::lp {

struct Feasibility {
  bool feasible = false;
  /// A vertex solution of A x = b, x >= 0 when feasible.
  std::vector<Rational> solution;
  std::size_t pivots = 0;
};

/// Phase-one primal simplex on a dense exact tableau with Bland's rule, so
/// it terminates on degenerate systems. A is row-major, rows x columns.
Feasibility find_nonnegative_solution(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

}  // namespace agisos::lp
