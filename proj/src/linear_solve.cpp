#include "hgt/linear_solve.hpp"

#include <utility>

namespace hgt {

std::optional<std::vector<Rational>> solve_unique(RationalMatrix matrix, std::vector<Rational> rhs) {
  const std::size_t rows = matrix.size();
  if (rows == 0) return std::nullopt;
  const std::size_t cols = matrix.front().size();

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && matrix[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) return std::nullopt;  // free column
    std::swap(matrix[rank], matrix[pivot]);
    std::swap(rhs[rank], rhs[pivot]);
    const Rational inv = inverse(matrix[rank][col]);
    for (auto& v : matrix[rank]) v *= inv;
    rhs[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || matrix[r][col].is_zero()) continue;
      const Rational f = matrix[r][col];
      for (std::size_t c = 0; c < cols; ++c) matrix[r][c] -= f * matrix[rank][c];
      rhs[r] -= f * rhs[rank];
    }
    ++rank;
  }
  if (rank < cols) return std::nullopt;
  for (std::size_t r = rank; r < rows; ++r) {
    if (!rhs[r].is_zero()) return std::nullopt;
  }
  rhs.resize(cols);
  return rhs;
}

}  // namespace hgt
