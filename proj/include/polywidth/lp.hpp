#pragma once

// Exact simplex in dictionary form with Bland's rule.
//
//   maximize c.x  subject to  A x <= b,  x >= 0,   with b >= 0
//
// b >= 0 makes the origin feasible, so there is no phase one. Callers with
// free variables shift them to an interior point first.

#include <optional>
#include <vector>

#include "polywidth/error.hpp"
#include "polywidth/linalg.hpp"
#include "polywidth/rational.hpp"

namespace polywidth {

struct LinearProgram {
  linalg::Matrix a;  // m rows, n columns
  Point b;           // m, all >= 0
  Point c;           // n
};

struct LpSolution {
  Rational value;
  Point x;
  std::size_t pivots = 0;
};

/// Optimal solution, or nullopt if the objective is unbounded.
inline std::optional<LpSolution> solve_lp(const LinearProgram& lp) {
  const auto m = lp.a.size();
  const auto n = lp.c.size();
  require(lp.b.size() == m, ErrorKind::Usage, "lp: b has wrong length");
  for (const auto& row : lp.a) require(row.size() == n, ErrorKind::Usage, "lp: ragged constraint matrix");
  for (const auto& x : lp.b) require(x >= 0, ErrorKind::Precondition, "lp: origin must be feasible (b >= 0)");

  // x_B[i] = b[i] - sum_j d[i][j] * x_N[j];   z = z0 + sum_j c[j] * x_N[j]
  // Variables 0..n-1 are structural, n..n+m-1 are slacks.
  std::vector<std::size_t> basic(m), nonbasic(n);
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;
  linalg::Matrix d = lp.a;
  Point b = lp.b, c = lp.c;
  Rational z0 = 0;
  std::size_t pivots = 0;

  while (true) {
    // Bland: entering variable has the smallest index among improving ones.
    std::size_t s = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(c[j]) > 0 && (s == n || nonbasic[j] < nonbasic[s])) s = j;
    if (s == n) break;

    std::size_t r = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(d[i][s]) <= 0) continue;
      Rational ratio = b[i] / d[i][s];
      if (r == m || ratio < best || (ratio == best && basic[i] < basic[r])) {
        r = i;
        best = std::move(ratio);
      }
    }
    if (r == m) return std::nullopt;

    const Rational inv = 1 / d[r][s];
    b[r] *= inv;
    for (std::size_t j = 0; j < n; ++j)
      if (j != s && sgn(d[r][j]) != 0) d[r][j] *= inv;
    d[r][s] = inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(d[i][s]) == 0) continue;
      const Rational f = d[i][s];
      b[i] -= f * b[r];
      for (std::size_t j = 0; j < n; ++j)
        if (j != s && sgn(d[r][j]) != 0) d[i][j] -= f * d[r][j];
      d[i][s] = -f * inv;
    }
    const Rational f = c[s];
    z0 += f * b[r];
    for (std::size_t j = 0; j < n; ++j)
      if (j != s && sgn(d[r][j]) != 0) c[j] -= f * d[r][j];
    c[s] = -f * inv;
    std::swap(basic[r], nonbasic[s]);
    ++pivots;
  }

  LpSolution sol{z0, Point(n, Rational(0)), pivots};
  for (std::size_t i = 0; i < m; ++i)
    if (basic[i] < n) sol.x[basic[i]] = b[i];
  return sol;
}

}  // namespace polywidth
