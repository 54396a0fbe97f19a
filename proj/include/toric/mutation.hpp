#pragma once

#include "toric/lg.hpp"

namespace toric {

// Birational map between the chart tori of two amenable collections
// subordinate to one nef partition, sending the target chart to the source
// chart. q is the basis-change matrix with v_i = sum_j q_ij u_j (source
// rows in terms of target rows); the components are built from its
// inverse-transpose, which is what the coordinate change of the dual bases
// requires.
struct MutationMap {
  const AmenableCollection* source;
  const AmenableCollection* target;
  IntMat q;
  std::vector<RationalFunction> h;  // one per chart variable of the source
};

MutationMap build_mutation(const AmenableCollection& source,
                           const AmenableCollection& target,
                           const GiventalModel& model);

struct MutationReport {
  bool pullback_matches = false;
  bool jacobian_unit = false;
  int jacobian_sign = 0;  // sign of det at the sampled points
  bool jacobian_symbolic_checked = false;
  std::vector<RatVec> witness_points;
  bool all_passed() const { return pullback_matches && jacobian_unit; }
};

// (a) source potential composed with the map equals the target potential
// exactly; (b) the log-Jacobian determinant equals one at `samples` seeded
// rational points off the poles, and symbolically when sizes permit.
MutationReport verify_mutation(const MutationMap& m,
                               const EliminationResult& source_out,
                               const EliminationResult& target_out,
                               unsigned long seed = 20240901, int samples = 20,
                               int symbolic_term_budget = 4000);

}  // namespace toric
