#include "toric/lattice.hpp"

#include "toric/errors.hpp"

namespace toric {

IntMat Basis::matrix() const {
  IntMat m;
  m.reserve(rows.size());
  for (const DualVector& v : rows) m.push_back(v.c);
  return m;
}

std::vector<LatticeVector> Basis::dual_columns() const {
  RatMat inv = rat_inverse(to_rat(matrix()));
  int n = rank();
  std::vector<LatticeVector> cols(n);
  for (int j = 0; j < n; ++j) {
    IntVec col(n);
    for (int i = 0; i < n; ++i) {
      if (!is_integral(inv[i][j]))
        throw invariant_violation("basis inverse is not integral");
      col[i] = inv[i][j].get_num();
    }
    cols[j] = LatticeVector{std::move(col)};
  }
  return cols;
}

Int pair(const DualVector& v, const LatticeVector& m) {
  if (v.rank() != m.rank())
    throw dimension_error("pairing of vectors of different ranks");
  Int s = 0;
  for (size_t i = 0; i < v.c.size(); ++i) s += v.c[i] * m.c[i];
  return s;
}

Rat pair(const RatVec& v, const RatVec& m) {
  if (v.size() != m.size())
    throw dimension_error("pairing of vectors of different ranks");
  Rat s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * m[i];
  return s;
}

LatticeVector primitive(const LatticeVector& m) {
  Int g = 0;
  for (const Int& x : m.c) g = gcd(g, x);
  if (g == 0) throw degenerate_input_error("primitive of the zero vector");
  IntVec r(m.c.size());
  for (size_t i = 0; i < m.c.size(); ++i) r[i] = m.c[i] / g;
  return LatticeVector{std::move(r)};
}

namespace {

IntMat rows_matrix(const std::vector<DualVector>& vs) {
  IntMat a;
  a.reserve(vs.size());
  for (const DualVector& v : vs) a.push_back(v.c);
  return a;
}

}  // namespace

bool is_saturated_span(const std::vector<DualVector>& vs) {
  if (vs.empty()) throw degenerate_input_error("empty vector collection");
  IntMat a = rows_matrix(vs);
  if (rat_rank(to_rat(a)) != static_cast<int>(vs.size()))
    throw rank_error("vectors are linearly dependent");
  SmithResult s = smith_normal_form(a);
  for (const Int& d : s.divisors)
    if (d != 1) return false;
  return true;
}

Basis extend_to_basis(const std::vector<DualVector>& vs, int ambient_rank) {
  Basis b;
  if (vs.empty()) {
    for (int i = 0; i < ambient_rank; ++i) {
      IntVec e(ambient_rank, 0);
      e[i] = 1;
      b.rows.push_back(DualVector{std::move(e)});
    }
    return b;
  }
  for (const DualVector& v : vs)
    if (v.rank() != ambient_rank)
      throw dimension_error("vector rank differs from ambient rank");
  if (!is_saturated_span(vs))
    throw saturation_error("span is not saturated; no unimodular completion");
  // With u a v = [I 0], the rows of a together with the trailing rows of
  // v^{-1} form a unimodular matrix.
  SmithResult s = smith_normal_form(rows_matrix(vs));
  b.rows = vs;
  for (int i = static_cast<int>(vs.size()); i < ambient_rank; ++i)
    b.rows.push_back(DualVector{s.vinv[i]});
  Int det = imat_det(b.matrix());
  if (det != 1 && det != -1)
    throw invariant_violation("basis completion is not unimodular");
  return b;
}

Basis make_basis(const std::vector<DualVector>& rows) {
  Basis b{rows};
  for (const DualVector& v : rows)
    if (v.rank() != b.rank())
      throw dimension_error("basis rows of unequal rank");
  Int det = imat_det(b.matrix());
  if (det != 1 && det != -1) throw rank_error("matrix is not unimodular");
  return b;
}

std::vector<LatticeVector> kernel_lattice_basis(
    const std::vector<DualVector>& vs, int ambient_rank) {
  if (vs.empty()) {
    std::vector<LatticeVector> id;
    for (int i = 0; i < ambient_rank; ++i) {
      IntVec e(ambient_rank, 0);
      e[i] = 1;
      id.push_back(LatticeVector{std::move(e)});
    }
    return id;
  }
  IntMat basis = integer_kernel_basis(rows_matrix(vs));
  std::vector<LatticeVector> out;
  out.reserve(basis.size());
  for (IntVec& v : basis) out.push_back(LatticeVector{std::move(v)});
  return out;
}

}  // namespace toric
