#include "blockalg/linear.hpp"

#include <stdexcept>

namespace blockalg {

std::vector<std::size_t> reduced_row_echelon(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < rows && m[pivot_row][col].is_zero()) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(m[row], m[pivot_row]);

    const Scalar inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Scalar factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

static ScalarMatrix nullspace_from_rref(const ScalarMatrix& m,
                                        const std::vector<std::size_t>& pivots,
                                        std::size_t columns) {
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  ScalarMatrix basis;
  for (std::size_t free_col = 0; free_col < columns; ++free_col) {
    if (is_pivot[free_col]) continue;
    ScalarRow v(columns, Scalar(0));
    v[free_col] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(ScalarMatrix lhs, ScalarRow rhs, std::size_t columns) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("solve_linear: row count mismatch");

  // augment and reduce; a pivot landing in the rhs column means no solution
  for (std::size_t r = 0; r < lhs.size(); ++r) lhs[r].push_back(rhs[r]);
  std::vector<std::size_t> pivots = reduced_row_echelon(lhs);

  LinearSolution out;
  if (!pivots.empty() && pivots.back() == columns) {
    out.status = SolveStatus::inconsistent;
    return out;
  }

  out.solution.assign(columns, Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) out.solution[pivots[r]] = lhs[r][columns];

  if (pivots.size() < columns) {
    out.status = SolveStatus::underdetermined;
    // strip the augmented column before reading the homogeneous basis
    ScalarMatrix hom = lhs;
    for (auto& row : hom) row.pop_back();
    out.nullspace = nullspace_from_rref(hom, pivots, columns);
  }
  return out;
}

ScalarMatrix nullspace_basis(ScalarMatrix lhs, std::size_t columns) {
  std::vector<std::size_t> pivots = reduced_row_echelon(lhs);
  return nullspace_from_rref(lhs, pivots, columns);
}

}  // namespace blockalg
