#include "toric/simplex.hpp"

#include <cstddef>

namespace toric {

namespace {

// Full-tableau simplex step loop with Bland's rule: min cost'x over the
// current feasible basis, scanning columns [0, nscan) for entering
// candidates; rhs lives in column rhs_col. `value` tracks the negative of
// the current objective. Returns false when unbounded.
bool run_simplex(RatMat& t, RatVec& cost, Rat& value, std::vector<int>& basis,
                 size_t nscan, size_t rhs_col) {
  size_t m = t.size();
  for (;;) {
    size_t enter = nscan;
    for (size_t j = 0; j < nscan; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;  // Bland: smallest index
      }
    if (enter == nscan) return true;
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][rhs_col] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return false;  // unbounded
    Rat piv = t[leave][enter];
    for (size_t j = 0; j <= rhs_col; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j <= rhs_col; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rat f = cost[enter];
      for (size_t j = 0; j < cost.size(); ++j) cost[j] -= f * t[leave][j];
      value -= f * t[leave][rhs_col];
    }
    basis[leave] = static_cast<int>(enter);
  }
}

}  // namespace

LpSolution lp_solve(const RatMat& a0, const RatVec& b0, const RatVec& c) {
  size_t m = a0.size();
  size_t n = m ? a0[0].size() : c.size();
  RatMat a = a0;
  RatVec b = b0;
  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      b[i] = -b[i];
      for (Rat& v : a[i]) v = -v;
    }
  size_t ncols = n + m;  // originals + artificials
  size_t rhs = ncols;
  RatMat t(m, RatVec(ncols + 1, 0));
  std::vector<int> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = b[i];
    basis[i] = static_cast<int>(n + i);
  }

  // Phase 1: minimize the sum of artificials.
  RatVec cost(ncols + 1, 0);
  Rat value = 0;
  for (size_t j = n; j < ncols; ++j) cost[j] = 1;
  for (size_t i = 0; i < m; ++i) {  // reduce the cost row against the basis
    for (size_t j = 0; j < ncols; ++j) cost[j] -= t[i][j];
    value -= t[i][rhs];
  }
  run_simplex(t, cost, value, basis, ncols, rhs);
  if (-value > 0) return {LpStatus::kInfeasible, 0, {}};

  // Drive leftover artificials out of the basis or drop redundant rows.
  for (size_t i = 0; i < t.size();) {
    if (basis[i] < static_cast<int>(n)) {
      ++i;
      continue;
    }
    size_t piv = n;
    for (size_t j = 0; j < n; ++j)
      if (t[i][j] != 0) {
        piv = j;
        break;
      }
    if (piv == n) {
      t.erase(t.begin() + i);
      basis.erase(basis.begin() + i);
      continue;
    }
    Rat p = t[i][piv];
    for (size_t j = 0; j <= rhs; ++j) t[i][j] /= p;
    for (size_t r = 0; r < t.size(); ++r) {
      if (r == i || t[r][piv] == 0) continue;
      Rat f = t[r][piv];
      for (size_t j = 0; j <= rhs; ++j) t[r][j] -= f * t[i][j];
    }
    basis[i] = static_cast<int>(piv);
    ++i;
  }
  m = t.size();

  // Phase 2 over the original columns only.
  RatVec cost2(ncols + 1, 0);
  for (size_t j = 0; j < n && j < c.size(); ++j) cost2[j] = c[j];
  Rat value2 = 0;
  for (size_t i = 0; i < m; ++i) {
    int bj = basis[i];
    if (cost2[bj] == 0) continue;
    Rat f = cost2[bj];
    for (size_t j = 0; j < ncols; ++j) cost2[j] -= f * t[i][j];
    value2 -= f * t[i][rhs];
  }
  if (!run_simplex(t, cost2, value2, basis, n, rhs))
    return {LpStatus::kUnbounded, 0, {}};
  RatVec x(n, 0);
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < static_cast<int>(n)) x[basis[i]] = t[i][rhs];
  return {LpStatus::kOptimal, -value2, x};
}

bool lp_feasible(const RatMat& a, const RatVec& b) {
  size_t n = a.empty() ? 0 : a[0].size();
  return lp_solve(a, b, RatVec(n, 0)).status == LpStatus::kOptimal;
}

LpSolution lp_minimize_general(const RatMat& g, const RatVec& h,
                               const RatVec& c) {
  size_t m = g.size();
  size_t n = c.size();
  // t = u - w with u, w >= 0, plus a slack per row.
  RatMat a(m, RatVec(2 * n + m, 0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) {
      a[i][j] = g[i][j];
      a[i][n + j] = -g[i][j];
    }
    a[i][2 * n + i] = 1;
  }
  RatVec cc(2 * n + m, 0);
  for (size_t j = 0; j < n; ++j) {
    cc[j] = c[j];
    cc[n + j] = -c[j];
  }
  LpSolution s = lp_solve(a, h, cc);
  if (s.status != LpStatus::kOptimal) return s;
  RatVec x(n);
  for (size_t j = 0; j < n; ++j) x[j] = s.x[j] - s.x[n + j];
  return {LpStatus::kOptimal, s.value, x};
}

bool in_cone(const std::vector<RatVec>& generators, const RatVec& x) {
  size_t d = x.size();
  size_t m = generators.size();
  RatMat a(d, RatVec(m));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < m; ++j) a[i][j] = generators[j][i];
  return lp_feasible(a, x);
}

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& p) {
  if (points.empty()) return false;
  size_t d = p.size();
  size_t m = points.size();
  RatMat a(d + 1, RatVec(m));
  RatVec b(d + 1);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < m; ++j) a[i][j] = points[j][i];
    b[i] = p[i];
  }
  for (size_t j = 0; j < m; ++j) a[d][j] = 1;
  b[d] = 1;
  return lp_feasible(a, b);
}

}  // namespace toric
