#pragma once

#include <map>
#include <string>

#include "toric/nef.hpp"

namespace toric {

// Ordered dual vectors v_1, ..., v_k subordinate to a nef partition: v_i is
// -1 on its own part, 0 on earlier parts, >= 0 on later parts (including the
// last). The completion extends them to a basis of N.
struct AmenableCollection {
  NefPtr partition;
  std::vector<DualVector> vectors;
  Basis completion;  // first k rows are the vectors verbatim
};

// The three defining conditions, checked entry by entry.
bool verify_amenable(const NefPartition& p,
                     const std::vector<DualVector>& vectors);

// All amenable collections with coordinates in [-bound, bound], found
// part-by-part and returned in lexicographic order of the concatenated
// coordinate tuples. Collections whose span fails saturation are discarded
// (none should be); their count is reported through dropped when given.
std::vector<AmenableCollection> search_amenable(NefPtr p, long bound,
                                                int* dropped = nullptr);

// Pairing matrix (<v_i, rho>) with one row per vector, one column per ray.
IntMat pairing_matrix(const NefPartition& p,
                      const std::vector<DualVector>& vectors);

// No square submatrix in which every row has both a positive and a negative
// entry. Exhaustive minor search up to the given submatrix size.
bool is_mixed_dominating(const IntMat& m, int max_size = 12);

// Structural fast path for matrices of amenable collections: the sign
// pattern of the defining conditions already forces mixed dominance.
bool is_mixed_dominating_amenable(const NefPartition& p,
                                  const std::vector<DualVector>& vectors);

// One binomial per vector: positive monomial with exponent 1 on the own
// part, negative monomial with exponent <v_i, rho> on the positive pairings
// elsewhere.
struct Binomial {
  std::map<int, Int> pos;
  std::map<int, Int> neg;
};

struct DegenerationData {
  std::vector<Binomial> binomials;
  Fan sigma_v;        // fan induced on M_V, in the completion chart
  Polytope delta_v;   // {phi_{k+1} <= 1} in the same chart
  std::vector<LatticeVector> chart;  // chart basis of M_V inside M
  bool cartier_hypothesis;  // part k+1 Cartier, or parts 1..k all Cartier
};

// Binomials, Sigma_V, Delta_V; verifies conv(Sigma_V rays) = Delta_V when
// the Cartier hypotheses hold. Throws geometry_error when Delta_V is
// unbounded and invariant_violation when a theorem check fails.
DegenerationData degeneration(const AmenableCollection& c);

struct TheoremReport {
  bool ray_representative_height_one = false;  // integral point at height 1
  bool primitivity_applicable = false;
  bool vertices_primitive = false;
  bool reflexivity_applicable = false;
  bool reflexive = false;
  std::vector<std::string> failures;
  bool all_passed() const { return failures.empty(); }
};

TheoremReport check_degeneration_theorems(const DegenerationData& d,
                                          const AmenableCollection& c);

}  // namespace toric
