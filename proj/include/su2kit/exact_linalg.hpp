#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "su2kit/complex_rational.hpp"

namespace su2kit {

using ExactVector = std::vector<ComplexRational>;
using ExactMatrix = std::vector<ExactVector>;  // row-major, rectangular

/// Row rank by fraction-exact Gaussian elimination.
inline int rank(ExactMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const ComplexRational inv = ComplexRational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const ComplexRational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Solves A x = b exactly (A may be rectangular / overdetermined).  Returns
/// nullopt when inconsistent; free variables, if any, are set to zero.
inline std::optional<ExactVector> solve_linear_system(ExactMatrix a, ExactVector b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear_system: shape mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::ptrdiff_t> pivot_col_of_row(rows, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    std::swap(b[r], b[pivot]);
    const ComplexRational inv = ComplexRational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const ComplexRational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col_of_row[r] = static_cast<std::ptrdiff_t>(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;  // 0 = nonzero row
  }
  ExactVector x(cols, ComplexRational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

}  // namespace su2kit
