#include "agisos/lp.hpp"

#include "agisos/error.hpp"

namespace agisos::lp {

Feasibility find_nonnegative_solution(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  const std::size_t rows = A.size();
  if (b.size() != rows) throw Error(ErrorCode::ArityMismatch, "right-hand side length differs from row count");
  const std::size_t cols = rows == 0 ? 0 : A.front().size();
  for (const auto& row : A) {
    if (row.size() != cols) throw Error(ErrorCode::RaggedInput, "constraint rows have different lengths");
  }

  // Columns: [0, cols) structural, [cols, cols + rows) artificial, last is rhs.
  const std::size_t width = cols + rows + 1;
  const std::size_t rhs = width - 1;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    t[i][cols + i] = 1;
    basis[i] = cols + i;
  }

  // Reduced costs for minimising the sum of artificials.
  std::vector<Rational> cost(width);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) cost[j] -= t[i][j];
  }
  for (std::size_t i = 0; i < rows; ++i) cost[rhs] -= t[i][rhs];

  Feasibility out;
  for (;;) {
    std::size_t entering = width;
    for (std::size_t j = 0; j < cols + rows; ++j) {
      if (sgn(cost[j]) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;

    std::size_t leaving = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][entering]) <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][entering];
      if (leaving == rows || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
        leaving = i;
        best = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leaving == rows) throw Error(ErrorCode::InternalInvariantViolation, "phase-one simplex reported unbounded");

    const Rational pivot = t[leaving][entering];
    for (auto& x : t[leaving]) x /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leaving || sgn(t[i][entering]) == 0) continue;
      const Rational factor = t[i][entering];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(t[leaving][j]) != 0) t[i][j] -= factor * t[leaving][j];
      }
    }
    if (sgn(cost[entering]) != 0) {
      const Rational factor = cost[entering];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(t[leaving][j]) != 0) cost[j] -= factor * t[leaving][j];
      }
    }
    basis[leaving] = entering;
    ++out.pivots;
  }

  // cost[rhs] holds minus the optimal sum of artificials.
  out.feasible = sgn(cost[rhs]) == 0;
  if (out.feasible) {
    out.solution.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] < cols) out.solution[basis[i]] = t[i][rhs];
    }
  }
  return out;
}

}  // namespace agisos::lp
