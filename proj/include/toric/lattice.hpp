#pragma once

#include <vector>

#include "toric/linalg.hpp"

namespace toric {

// Element of the lattice M of rank n. Fans and polytopes live in M x R;
// ray generators, polytope vertices and monomial exponents are M-vectors.
struct LatticeVector {
  IntVec c;
  int rank() const { return static_cast<int>(c.size()); }
  bool operator==(const LatticeVector&) const = default;
  auto operator<=>(const LatticeVector&) const = default;
};

// Element of N = Hom(M, Z). Support functionals, amenable vectors and basis
// rows are N-vectors.
struct DualVector {
  IntVec c;
  int rank() const { return static_cast<int>(c.size()); }
  bool operator==(const DualVector&) const = default;
  auto operator<=>(const DualVector&) const = default;
};

// A Z-basis of N, stored as rows. |det| = 1 by construction.
struct Basis {
  std::vector<DualVector> rows;
  int rank() const { return static_cast<int>(rows.size()); }
  IntMat matrix() const;
  // Columns of the inverse matrix: the dual basis of M, column j pairing to
  // delta_ij with row i.
  std::vector<LatticeVector> dual_columns() const;
};

Int pair(const DualVector& v, const LatticeVector& m);
Rat pair(const RatVec& v, const RatVec& m);

LatticeVector primitive(const LatticeVector& m);

// True iff the span of vs is a saturated (primitive) sublattice of N, i.e.
// all elementary divisors equal 1. Throws rank_error on dependent input.
bool is_saturated_span(const std::vector<DualVector>& vs);

// Extends vs (spanning a saturated sublattice) to a basis of N whose first
// |vs| rows are vs verbatim. Deterministic. Throws saturation_error when the
// span is not saturated.
Basis extend_to_basis(const std::vector<DualVector>& vs, int ambient_rank);

// Validates an explicitly given basis (|det| = 1, matching ranks).
Basis make_basis(const std::vector<DualVector>& rows);

// Deterministic basis of the saturated sublattice {m in M : <v,m> = 0 for
// all v in vs} of M.
std::vector<LatticeVector> kernel_lattice_basis(
    const std::vector<DualVector>& vs, int ambient_rank);

}  // namespace toric
