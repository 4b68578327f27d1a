#include "rhocalc/exact_linalg.hpp"

#include "rhocalc/error.hpp"

namespace rhocalc {

int exact_rank(CyclotomicMatrix matrix) {
  if (matrix.empty()) return 0;
  const std::size_t cols = matrix.front().size();
  int order = 1;
  for (const auto& row : matrix) {
    if (row.size() != cols) throw ValidationError("exact_rank: ragged matrix");
    for (const auto& x : row) order = lcm_order(order, x.order());
  }
  for (auto& row : matrix) {
    for (auto& x : row) x = x.lift(order);
  }

  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < matrix.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < matrix.size() && matrix[found][col].is_zero()) ++found;
    if (found == matrix.size()) continue;
    std::swap(matrix[found], matrix[pivot_row]);
    const Cyclotomic pivot_inverse = matrix[pivot_row][col].inverse();
    for (std::size_t r = pivot_row + 1; r < matrix.size(); ++r) {
      if (matrix[r][col].is_zero()) continue;
      const Cyclotomic factor = matrix[r][col] * pivot_inverse;
      for (std::size_t c = col; c < cols; ++c) {
        if (!matrix[pivot_row][c].is_zero()) matrix[r][c] -= factor * matrix[pivot_row][c];
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace rhocalc
