#pragma once

#include <vector>

#include "errors.hpp"

namespace dpgc {

template <typename F>
struct LpResult {
  F optimum;
  std::vector<F> solution;
};

// Primal simplex with Bland's anti-cycling rule for
//   maximize c.x  subject to  A x <= b, x >= 0,  with b >= 0
// so the slack basis is the (dual-feasible at zero) warm start. F is double
// (eps ~ 1e-9) or an exact rational type (eps = 0).
template <typename F>
LpResult<F> simplex_maximize(const std::vector<std::vector<F>>& a, const std::vector<F>& b,
                             const std::vector<F>& c, const F& eps) {
  const std::size_t m = a.size(), n = c.size();
  for (const auto& row : a)
    if (row.size() != n) throw validation_error("LP constraint width mismatch");
  if (b.size() != m) throw validation_error("LP right-hand side length mismatch");
  for (const F& bi : b)
    if (bi < -eps) throw validation_error("LP right-hand side must be nonnegative");

  const std::size_t cols = n + m + 1;  // structural | slack | rhs
  std::vector<std::vector<F>> t(m + 1, std::vector<F>(cols, F(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = F(1);
    t[i][cols - 1] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  const std::size_t max_iters = 200 * (m + n) * (m + n) + 1000;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > max_iters) throw internal_error("simplex iteration cap exceeded");
    // Bland: the lowest-index improving column
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (t[m][j] < -eps) {
        enter = j;
        break;
      }
    if (enter == cols) break;  // optimal

    // ratio test, ties broken by the smallest basis variable
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= eps) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      F lhs = t[i][cols - 1] * t[leave][enter];
      F rhs = t[leave][cols - 1] * t[i][enter];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) throw validation_error("LP is unbounded");

    // pivot
    F piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      F f = t[i][enter];
      if (f == F(0)) continue;
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult<F> out;
  out.optimum = t[m][cols - 1];
  out.solution.assign(n, F(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) out.solution[basis[i]] = t[i][cols - 1];
  return out;
}

}  // namespace dpgc
