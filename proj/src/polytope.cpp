#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/errors.hpp"

namespace toric {

bool Polytope::is_integral() const {
  for (const RatVec& v : vertices)
    for (const Rat& q : v)
      if (!is_integral(q)) return false;
  return true;
}

std::vector<LatticeVector> Polytope::lattice_vertices() const {
  std::vector<LatticeVector> out;
  out.reserve(vertices.size());
  for (const RatVec& v : vertices) {
    IntVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      if (!is_integral(v[i]))
        throw invariant_violation("polytope vertex is not a lattice point");
      w[i] = v[i].get_num();
    }
    out.push_back(LatticeVector{std::move(w)});
  }
  return out;
}

bool Polytope::contains(const RatVec& p) const {
  return in_convex_hull(vertices, p);
}

namespace {

// Distinct points, lexicographically sorted.
std::vector<RatVec> dedupe_sorted(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

int affine_dim(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return 0;
  RatMat dirs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec d(pts[0].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    dirs.push_back(std::move(d));
  }
  return rat_rank(dirs);
}

// Scale a rational normal to primitive integral form.
RatVec normalize_normal(const RatVec& n) {
  IntVec prim = primitive_direction(n);
  return to_rat(prim);
}

// All supporting hyperplanes spanned by point subsets: full-dimensional case.
std::vector<Facet> enumerate_facets(const std::vector<RatVec>& verts,
                                    int rank) {
  size_t m = verts.size();
  std::set<std::pair<RatVec, Rat>> seen;
  std::vector<Facet> facets;
  // Iterate over all rank-subsets of vertices.
  std::vector<int> comb(rank);
  for (int i = 0; i < rank; ++i) comb[i] = i;
  auto advance = [&]() -> bool {
    int i = rank - 1;
    while (i >= 0 && comb[i] == static_cast<int>(m) - rank + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < rank; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  if (static_cast<int>(m) < rank) return facets;
  do {
    // Hyperplane through the chosen points: normal spans the kernel of the
    // difference matrix.
    RatMat dirs;
    for (int i = 1; i < rank; ++i) {
      RatVec d(verts[comb[0]].size());
      for (size_t j = 0; j < d.size(); ++j)
        d[j] = verts[comb[i]][j] - verts[comb[0]][j];
      dirs.push_back(std::move(d));
    }
    RatMat ker = rat_kernel(dirs);
    if (ker.size() != 1) continue;  // points not affinely independent
    RatVec normal = normalize_normal(ker[0]);
    Rat offset = pair(normal, verts[comb[0]]);
    int sign = 0;
    bool supporting = true;
    for (const RatVec& v : verts) {
      Rat s = pair(normal, v) - offset;
      if (s == 0) continue;
      int sg = s > 0 ? 1 : -1;
      if (sign == 0) sign = sg;
      if (sg != sign) {
        supporting = false;
        break;
      }
    }
    if (!supporting) continue;
    if (sign > 0) {
      for (Rat& q : normal) q = -q;
      offset = -offset;
    }
    if (seen.emplace(normal, offset).second) facets.push_back({normal, offset});
  } while (advance());
  return facets;
}

}  // namespace

Polytope convex_hull(const std::vector<RatVec>& points, int max_facet_rank) {
  if (points.empty()) throw degenerate_input_error("convex hull of no points");
  int rank = static_cast<int>(points[0].size());
  for (const RatVec& p : points)
    if (static_cast<int>(p.size()) != rank)
      throw dimension_error("points of unequal rank");
  std::vector<RatVec> pts = dedupe_sorted(points);

  // Extreme-point filter: p is a vertex iff it is not a convex combination
  // of the remaining points.
  std::vector<RatVec> verts;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<RatVec> others;
    others.reserve(pts.size() - 1);
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(others, pts[i])) verts.push_back(pts[i]);
  }

  Polytope p;
  p.ambient_rank = rank;
  p.vertices = std::move(verts);
  p.dim = affine_dim(p.vertices);
  if (p.dim == rank && rank <= max_facet_rank) {
    p.facets = enumerate_facets(p.vertices, rank);
    p.contains_origin_interior = true;
    for (const Facet& f : *p.facets)
      if (f.offset <= 0) {
        p.contains_origin_interior = false;
        break;
      }
  }
  return p;
}

Polytope convex_hull_lattice(const std::vector<LatticeVector>& points,
                             int max_facet_rank) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const LatticeVector& p : points) pts.push_back(to_rat(p.c));
  return convex_hull(pts, max_facet_rank);
}

bool is_reflexive(const Polytope& p) {
  if (p.dim != p.ambient_rank)
    throw geometry_error("reflexivity needs a full-dimensional polytope");
  if (!p.is_integral())
    throw geometry_error("reflexivity needs integral vertices");
  if (!p.facets) throw geometry_error("facets were not enumerated");
  if (!p.contains_origin_interior)
    throw geometry_error("origin is not interior");
  for (const Facet& f : *p.facets)
    if (f.offset != 1) return false;
  return true;
}

}  // namespace toric
