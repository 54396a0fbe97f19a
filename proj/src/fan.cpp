#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/errors.hpp"

namespace toric {

std::vector<RatVec> Fan::cone_generators(int cone) const {
  std::vector<RatVec> g;
  for (int i : maximal_cones[cone]) g.push_back(to_rat(rays[i].c));
  return g;
}

bool Fan::cone_contains(int cone, const RatVec& x) const {
  return in_cone(cone_generators(cone), x);
}

int Fan::find_cone(const RatVec& x) const {
  for (size_t c = 0; c < maximal_cones.size(); ++c)
    if (cone_contains(static_cast<int>(c), x)) return static_cast<int>(c);
  return -1;
}

Fan face_fan(const Polytope& p) {
  if (p.dim != p.ambient_rank || !p.facets)
    throw geometry_error("face fan needs a full-dimensional polytope");
  if (!p.contains_origin_interior)
    throw geometry_error("face fan needs the origin in the interior");
  Fan f;
  f.rank = p.ambient_rank;
  for (const RatVec& v : p.vertices)
    f.rays.push_back(primitive(LatticeVector{primitive_direction(v)}));
  for (const Facet& fac : *p.facets) {
    std::vector<int> cone;
    for (size_t i = 0; i < p.vertices.size(); ++i)
      if (pair(fac.normal, p.vertices[i]) == fac.offset)
        cone.push_back(static_cast<int>(i));
    std::sort(cone.begin(), cone.end());
    f.maximal_cones.push_back(std::move(cone));
  }
  std::sort(f.maximal_cones.begin(), f.maximal_cones.end());
  return f;
}

namespace {

// Deterministic direction sampler (plain LCG; no float, no global state).
struct Lcg {
  unsigned long long s = 0x2545F4914F6CDD1DULL;
  long next(long lo, long hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((s >> 33) % (hi - lo + 1));
  }
};

}  // namespace

void check_complete(const Fan& f, int samples) {
  if (f.maximal_cones.empty()) {
    if (f.rank == 0) return;
    throw geometry_error("fan has no maximal cones");
  }
  Lcg rng;
  for (int s = 0; s < samples; ++s) {
    RatVec x(f.rank);
    bool zero = true;
    for (int i = 0; i < f.rank; ++i) {
      long v = rng.next(-9, 9);
      if (v != 0) zero = false;
      x[i] = v;
    }
    if (zero) continue;
    if (f.find_cone(x) < 0)
      throw geometry_error("fan is not complete: uncovered direction");
  }
  if (f.rank > 3) return;
  // Wall check: every (rank-1)-dimensional face of a maximal cone must be
  // shared by exactly two maximal cones.
  for (size_t c = 0; c < f.maximal_cones.size(); ++c) {
    const auto& cone = f.maximal_cones[c];
    size_t n = cone.size();
    std::vector<bool> pick(n, false);
    // Candidate walls: subsets spanning rank-1 dims whose span meets the
    // cone in a face. For rank <= 3 it is enough to look at subsets of
    // size rank-1 that lie on a supporting hyperplane of the cone.
    std::vector<std::vector<int>> subsets;
    if (f.rank == 1) {
      subsets.push_back({});
    } else {
      std::vector<int> comb(f.rank - 1);
      std::vector<int> idx(cone.begin(), cone.end());
      std::vector<bool> sel(n, false);
      std::fill(sel.begin(), sel.begin() + std::min<size_t>(f.rank - 1, n),
                true);
      std::sort(sel.begin(), sel.end());
      do {
        std::vector<int> sub;
        for (size_t i = 0; i < n; ++i)
          if (sel[i]) sub.push_back(idx[i]);
        if (static_cast<int>(sub.size()) == f.rank - 1) subsets.push_back(sub);
      } while (std::next_permutation(sel.begin(), sel.end()));
    }
    for (const auto& wall : subsets) {
      RatMat dirs;
      for (int i : wall) dirs.push_back(to_rat(f.rays[i].c));
      if (rat_rank(dirs) != f.rank - 1) continue;
      RatMat ker = rat_kernel(dirs);
      if (ker.size() != 1) continue;
      RatVec normal = ker[0];
      int sign = 0;
      bool supporting = true;
      for (int i : cone) {
        Rat s = pair(normal, to_rat(f.rays[i].c));
        if (s == 0) continue;
        int sg = s > 0 ? 1 : -1;
        if (sign == 0) sign = sg;
        if (sg != sign) {
          supporting = false;
          break;
        }
      }
      if (!supporting) continue;  // interior hyperplane, not a wall
      int count = 0;
      for (size_t c2 = 0; c2 < f.maximal_cones.size(); ++c2) {
        bool has_all = true;
        for (int i : wall)
          if (!std::binary_search(f.maximal_cones[c2].begin(),
                                  f.maximal_cones[c2].end(), i)) {
            has_all = false;
            break;
          }
        if (has_all) ++count;
      }
      if (count != 2)
        throw geometry_error("fan wall is not shared by exactly two cones");
    }
  }
}

bool cones_intersect_in_faces(const Fan& f) {
  // Necessary check: a generator of one cone lying inside another must be a
  // shared ray, and the shared rays must span the intersection.
  for (size_t a = 0; a < f.maximal_cones.size(); ++a)
    for (size_t b = a + 1; b < f.maximal_cones.size(); ++b) {
      for (int i : f.maximal_cones[a]) {
        if (!f.cone_contains(static_cast<int>(b), to_rat(f.rays[i].c)))
          continue;
        if (!std::binary_search(f.maximal_cones[b].begin(),
                                f.maximal_cones[b].end(), i))
          return false;
      }
      for (int i : f.maximal_cones[b]) {
        if (!f.cone_contains(static_cast<int>(a), to_rat(f.rays[i].c)))
          continue;
        if (!std::binary_search(f.maximal_cones[a].begin(),
                                f.maximal_cones[a].end(), i))
          return false;
      }
    }
  return true;
}

namespace {

// Extreme rays of {lambda >= 0 : A lambda = 0} for the k x s pairing matrix
// A, reported as lambda vectors. Supports have size at most k+1 (the active
// constraints must leave a one-dimensional solution space).
std::vector<RatVec> pointed_cone_sections(const RatMat& a, size_t s) {
  size_t k = a.size();
  std::vector<RatVec> out;
  std::vector<int> sub;
  auto emit = [&](const std::vector<int>& cols) {
    RatMat restricted(k, RatVec(cols.size()));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < cols.size(); ++j)
        restricted[i][j] = a[i][cols[j]];
    RatMat ker = rat_kernel(restricted);
    if (ker.size() != 1) return;
    bool pos = true, neg = true;
    for (const Rat& q : ker[0]) {
      if (q <= 0) pos = false;
      if (q >= 0) neg = false;
    }
    if (!pos && !neg) return;
    RatVec lambda(s, 0);
    for (size_t j = 0; j < cols.size(); ++j)
      lambda[cols[j]] = pos ? ker[0][j] : -ker[0][j];
    out.push_back(std::move(lambda));
  };
  // All nonempty subsets of columns of size <= k+1.
  std::vector<int> stack;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (!stack.empty()) emit(stack);
    if (stack.size() == k + 1) return;
    for (size_t j = start; j < s; ++j) {
      stack.push_back(static_cast<int>(j));
      self(self, j + 1);
      stack.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Fan intersect_fan_with_subspace(const Fan& f,
                                const std::vector<DualVector>& subspace,
                                std::vector<LatticeVector> chart) {
  if (subspace.empty()) return f;
  size_t k = subspace.size();
  IntMat rows;
  for (const DualVector& v : subspace) {
    if (v.rank() != f.rank)
      throw dimension_error("subspace vector rank mismatch");
    rows.push_back(v.c);
  }
  if (rat_rank(to_rat(rows)) != static_cast<int>(k))
    throw rank_error("subspace vectors are linearly dependent");
  if (chart.empty()) chart = kernel_lattice_basis(subspace, f.rank);
  int sub_rank = f.rank - static_cast<int>(k);
  if (static_cast<int>(chart.size()) != sub_rank)
    throw chart_error("chart size does not match subspace corank");
  // Chart coordinates: solve chart-matrix^T * y = x for points x in M_V.
  RatMat chart_cols(f.rank, RatVec(sub_rank));
  for (int j = 0; j < sub_rank; ++j)
    for (int i = 0; i < f.rank; ++i) chart_cols[i][j] = chart[j].c[i];

  auto to_chart = [&](const IntVec& x) -> LatticeVector {
    auto sol = rat_solve(chart_cols, to_rat(x));
    if (!sol) throw chart_error("point does not lie in the chart lattice");
    IntVec y(sub_rank);
    for (int j = 0; j < sub_rank; ++j) {
      if (!is_integral((*sol)[j]))
        throw chart_error("point is not integral in the chart lattice");
      y[j] = (*sol)[j].get_num();
    }
    return LatticeVector{std::move(y)};
  };

  std::map<IntVec, int> ray_index;
  Fan out;
  out.rank = sub_rank;
  out.chart = chart;
  std::set<std::vector<int>> cone_set;
  for (size_t c = 0; c < f.maximal_cones.size(); ++c) {
    const auto& cone = f.maximal_cones[c];
    size_t s = cone.size();
    RatMat a(k, RatVec(s));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < s; ++j)
        a[i][j] = Rat(pair(subspace[i], f.rays[cone[j]]));
    std::vector<RatVec> sections = pointed_cone_sections(a, s);
    std::set<IntVec> rays_here;
    for (const RatVec& lambda : sections) {
      RatVec pt(f.rank, 0);
      for (size_t j = 0; j < s; ++j)
        for (int i = 0; i < f.rank; ++i)
          pt[i] += lambda[j] * f.rays[cone[j]].c[i];
      IntVec prim = primitive_direction(pt);
      rays_here.insert(to_chart(prim).c);
    }
    if (rays_here.empty()) continue;
    std::vector<IntVec> gens(rays_here.begin(), rays_here.end());
    RatMat span;
    for (const IntVec& g : gens) span.push_back(to_rat(g));
    if (rat_rank(span) != sub_rank) continue;  // not full-dimensional
    // Keep only extreme rays of the image cone.
    std::vector<int> cone_rays;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<RatVec> others;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(to_rat(gens[j]));
      if (!others.empty() && in_cone(others, to_rat(gens[i]))) continue;
      auto it = ray_index.emplace(gens[i], static_cast<int>(ray_index.size()));
      cone_rays.push_back(it.first->second);
    }
    std::sort(cone_rays.begin(), cone_rays.end());
    cone_set.insert(cone_rays);
  }
  out.rays.resize(ray_index.size());
  for (const auto& [vec, idx] : ray_index)
    out.rays[idx] = LatticeVector{vec};
  // Drop cones strictly contained in others (identical ray subsets).
  for (const auto& cone : cone_set) {
    bool maximal = true;
    for (const auto& other : cone_set) {
      if (other == cone) continue;
      if (std::includes(other.begin(), other.end(), cone.begin(), cone.end()))
        maximal = false;
    }
    if (maximal) out.maximal_cones.push_back(cone);
  }
  std::sort(out.maximal_cones.begin(), out.maximal_cones.end());
  return out;
}

bool PLFunction::is_integral() const {
  for (const RatVec& v : u)
    for (const Rat& q : v)
      if (!toric::is_integral(q)) return false;
  return true;
}

Rat pl_eval(const PLFunction& phi, const RatVec& x) {
  const Fan& f = *phi.fan;
  if (phi.convex) {
    Rat best;
    bool first = true;
    for (const RatVec& uc : phi.u) {
      Rat v = pair(uc, x);
      if (first || v > best) {
        best = v;
        first = false;
      }
    }
    return best;
  }
  int c = f.find_cone(x);
  if (c < 0) throw geometry_error("point not covered by the fan");
  return pair(phi.u[c], x);
}

Rat pl_eval(const PLFunction& phi, const LatticeVector& x) {
  return pl_eval(phi, to_rat(x.c));
}

bool pl_consistent(const PLFunction& phi) {
  const Fan& f = *phi.fan;
  for (size_t a = 0; a < f.maximal_cones.size(); ++a)
    for (size_t b = a + 1; b < f.maximal_cones.size(); ++b)
      for (int i : f.maximal_cones[a]) {
        if (!std::binary_search(f.maximal_cones[b].begin(),
                                f.maximal_cones[b].end(), i))
          continue;
        RatVec r = to_rat(f.rays[i].c);
        if (pair(phi.u[a], r) != pair(phi.u[b], r)) return false;
      }
  return true;
}

}  // namespace toric
