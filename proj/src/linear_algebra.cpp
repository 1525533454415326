#include "qlhp/linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace qlhp {

namespace {

// Reduces the augmented matrix in place to reduced row echelon form and
// returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational scale = m[row][col];
    for (auto& entry : m[row]) entry /= scale;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear_system(RationalMatrix matrix, std::vector<Rational> rhs,
                                                         std::size_t columns) {
  if (matrix.size() != rhs.size()) throw std::invalid_argument("row count does not match right-hand side");
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    if (matrix[r].size() != columns) throw std::invalid_argument("ragged matrix");
    matrix[r].push_back(rhs[r]);
  }
  const auto pivots = row_reduce(matrix, columns);
  for (std::size_t r = pivots.size(); r < matrix.size(); ++r) {
    if (matrix[r][columns] != 0) return std::nullopt;
  }
  std::vector<Rational> x(columns, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = matrix[r][columns];
  return x;
}

std::size_t rank(RationalMatrix matrix) {
  const std::size_t columns = matrix.empty() ? 0 : matrix.front().size();
  return row_reduce(matrix, columns).size();
}

}  // namespace qlhp
