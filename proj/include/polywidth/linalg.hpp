#pragma once

// Small dense exact linear algebra over the rationals.

#include <optional>
#include <utility>
#include <vector>

#include "polywidth/rational.hpp"

namespace polywidth::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Row-reduces in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return row_reduce(m, m.front().size()).size();
}

/// Unique solution of the square system A x = b, if A is non-singular.
inline std::optional<Point> solve(const Matrix& a, const Point& b) {
  const auto n = a.size();
  Matrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  if (row_reduce(aug, n).size() < n) return std::nullopt;
  Point x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

inline Rational determinant(Matrix m) {
  const auto n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Basis of the null space of m (rows are equations over ncols unknowns).
inline std::vector<Point> null_space(Matrix m, std::size_t ncols) {
  const auto pivots = row_reduce(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Point> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Point v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Affine dimension of a finite point set (-1 for the empty set).
inline int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  Matrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Point d(pts[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(std::move(diffs)));
}

inline Matrix from_int(const std::vector<IntVec>& rows) {
  Matrix m;
  for (const auto& r : rows) m.push_back(to_point(r));
  return m;
}

}  // namespace polywidth::linalg
