#include "toric/linalg.hpp"

#include <algorithm>
#include <cstddef>

#include "toric/errors.hpp"

namespace toric {

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    r[i].assign(m[i].begin(), m[i].end());
  return r;
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

IntVec primitive_direction(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& q : v) {
    Int l;
    mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    lcm = l;
  }
  IntVec w(v.size());
  Int content = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * lcm;
    w[i] = scaled.get_num();
    content = gcd(content, w[i]);
  }
  if (content == 0) throw degenerate_input_error("primitive of zero vector");
  for (Int& x : w) x /= content;
  return w;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> echelon(RatMat& m) {
  std::vector<int> pivots;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rat_rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

Rat rat_det(RatMat m) {
  size_t n = m.size();
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rat inv = 1 / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RatMat rat_inverse(const RatMat& m) {
  size_t n = m.size();
  RatMat aug(n, RatVec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<int> piv = echelon(aug);
  if (piv.size() != n || piv.back() >= static_cast<int>(n))
    throw rank_error("matrix is singular");
  RatMat inv(n, RatVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  RatMat aug(rows, RatVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> piv = echelon(aug);
  for (int p : piv)
    if (p == static_cast<int>(cols)) return std::nullopt;
  RatVec x(cols, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

RatMat rat_kernel(const RatMat& a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  RatMat m = a;
  std::vector<int> piv = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : piv) is_pivot[p] = true;
  RatMat basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
  RatVec y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  RatMat c(n, RatVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

IntMat imat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMat c(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Int imat_det(const IntMat& m) {
  Rat d = rat_det(to_rat(m));
  return d.get_num();  // integral for integer input
}

SmithResult smith_normal_form(const IntMat& a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  IntMat d = a;
  SmithResult res;
  res.u.assign(rows, IntVec(rows, 0));
  res.v.assign(cols, IntVec(cols, 0));
  res.vinv.assign(cols, IntVec(cols, 0));
  for (size_t i = 0; i < rows; ++i) res.u[i][i] = 1;
  for (size_t j = 0; j < cols; ++j) res.v[j][j] = res.vinv[j][j] = 1;

  auto row_add = [&](size_t dst, size_t src, const Int& f) {
    for (size_t j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
    for (size_t j = 0; j < rows; ++j) res.u[dst][j] += f * res.u[src][j];
  };
  auto col_add = [&](size_t dst, size_t src, const Int& f) {
    for (size_t i = 0; i < rows; ++i) d[i][dst] += f * d[i][src];
    for (size_t i = 0; i < cols; ++i) res.v[i][dst] += f * res.v[i][src];
    // (E^{-1}) applied on the left of vinv: subtract row dst from row src.
    for (size_t j = 0; j < cols; ++j) res.vinv[src][j] -= f * res.vinv[dst][j];
  };
  auto row_swap = [&](size_t i, size_t j) {
    std::swap(d[i], d[j]);
    std::swap(res.u[i], res.u[j]);
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(d[r][i], d[r][j]);
    for (size_t r = 0; r < cols; ++r) std::swap(res.v[r][i], res.v[r][j]);
    std::swap(res.vinv[i], res.vinv[j]);
  };
  auto row_negate = [&](size_t i) {
    for (size_t j = 0; j < cols; ++j) d[i][j] = -d[i][j];
    for (size_t j = 0; j < rows; ++j) res.u[i][j] = -res.u[i][j];
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // Deterministic pivot: smallest |entry| among nonzeros in the trailing
    // block, ties by smallest (row, col).
    bool found = false;
    size_t pi = t, pj = t;
    Int best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (d[i][j] == 0) continue;
        Int v = abs(d[i][j]);
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (d[t][t] < 0) row_negate(t);

    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      if (d[i][t] == 0) continue;
      Int q = d[i][t] / d[t][t];  // truncated division keeps remainders small
      if (q != 0) row_add(i, t, -q);
      if (d[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (d[t][j] == 0) continue;
      Int q = d[t][j] / d[t][t];
      if (q != 0) col_add(j, t, -q);
      if (d[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // pivot again on the smaller remainders

    // Divisibility fix-up: fold any entry the pivot does not divide into the
    // pivot row, then redo this step.
    bool divides_all = true;
    for (size_t i = t + 1; i < rows && divides_all; ++i)
      for (size_t j = t + 1; j < cols; ++j)
        if (d[i][j] % d[t][t] != 0) {
          row_add(t, i, 1);
          divides_all = false;
          break;
        }
    if (divides_all) ++t;
  }
  for (size_t i = 0; i < t; ++i) res.divisors.push_back(d[i][i]);
  return res;
}

IntMat integer_kernel_basis(const IntMat& a) {
  size_t cols = a.empty() ? 0 : a[0].size();
  SmithResult s = smith_normal_form(a);
  size_t r = s.divisors.size();
  // a * v has zero columns from r on, so those columns of v span the kernel.
  IntMat basis;
  for (size_t j = r; j < cols; ++j) {
    IntVec col(cols);
    for (size_t i = 0; i < cols; ++i) col[i] = s.v[i][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<IntVec> integral_solve(const IntMat& a, const IntVec& b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  SmithResult s = smith_normal_form(a);
  // a = u^{-1} d v^{-1}; solve d y = u b, then x = v y.
  IntVec ub(rows, 0);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < rows; ++j) ub[i] += s.u[i][j] * b[j];
  size_t r = s.divisors.size();
  IntVec y(cols, 0);
  for (size_t i = 0; i < rows; ++i) {
    if (i < r) {
      if (ub[i] % s.divisors[i] != 0) return std::nullopt;
      y[i] = ub[i] / s.divisors[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntVec x(cols, 0);
  for (size_t i = 0; i < cols; ++i)
    for (size_t j = 0; j < cols; ++j) x[i] += s.v[i][j] * y[j];
  return x;
}

}  // namespace toric
