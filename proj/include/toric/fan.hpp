#pragma once

#include <memory>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

// A complete fan in M x R: primitive ray generators plus maximal cones as
// sorted index sets into the ray list.
struct Fan {
  int rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<int>> maximal_cones;
  // Chart vectors when this fan lives in a proper subspace M_V: basis of the
  // saturated sublattice in the original ambient lattice, one per chart
  // coordinate. Empty for fans in the full lattice.
  std::vector<LatticeVector> chart;

  std::vector<RatVec> cone_generators(int cone) const;
  bool cone_contains(int cone, const RatVec& x) const;
  // Index of some maximal cone containing x; -1 when none does.
  int find_cone(const RatVec& x) const;
};

using FanPtr = std::shared_ptr<const Fan>;

// Fan over the faces of a polytope with the origin strictly interior.
Fan face_fan(const Polytope& p);

// Spot-check completeness on deterministically sampled directions; for
// rank <= 3 additionally check that every wall bounds exactly two maximal
// cones. Throws geometry_error on failure.
void check_complete(const Fan& f, int samples = 64);

// Check that shared rays of any two maximal cones span their intersection
// (cones meeting in faces). Intended for small instances.
bool cones_intersect_in_faces(const Fan& f);

// The fan induced on M_V = {u : <v,u> = 0 for v in subspace} expressed in
// lattice coordinates of M_V. When chart is empty a deterministic saturated
// kernel basis is used; a caller may pass its own chart (e.g. the dual basis
// of an amenable completion) so downstream comparisons share coordinates.
Fan intersect_fan_with_subspace(const Fan& f,
                                const std::vector<DualVector>& subspace,
                                std::vector<LatticeVector> chart = {});

// A piecewise-linear function on a fan: one rational functional per maximal
// cone.
struct PLFunction {
  FanPtr fan;
  std::vector<RatVec> u;  // u[c] is the functional on maximal cone c
  bool convex = false;    // max-formula agreement verified on all rays

  bool is_integral() const;
};

// Value at x. Convex functions use max over cones; otherwise the containing
// cone is located.
Rat pl_eval(const PLFunction& phi, const RatVec& x);
Rat pl_eval(const PLFunction& phi, const LatticeVector& x);

// Agreement of the functionals on shared rays of adjacent cones.
bool pl_consistent(const PLFunction& phi);

}  // namespace toric
