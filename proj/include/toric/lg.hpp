#pragma once

#include "toric/amenable.hpp"
#include "toric/laurent.hpp"

namespace toric {

// Coefficients a_rho for the model: all ones, an explicit positive value per
// ray, or the rule a_rho = t^{phi(rho)} for a convex integral function phi.
struct CoefficientRule {
  enum class Kind { kUnit, kExplicit, kPower } kind = Kind::kUnit;
  std::vector<Rat> values;          // kExplicit: one per ray
  Rat t = 1;                        // kPower
  const PLFunction* phi = nullptr;  // kPower
};

// Complete-intersection model in the torus: k constraints, each equated to
// 1, and the superpotential, all in the standard basis of N.
struct GiventalModel {
  NefPtr partition;
  std::vector<LaurentPolynomial> constraints;
  LaurentPolynomial potential;
  std::vector<Rat> coefficients;  // resolved a_rho per ray
};

GiventalModel build_givental(NefPtr partition,
                             const CoefficientRule& rule = {});

// Result of eliminating the constraint variables along an amenable
// collection: the Laurent superpotential in the chart variables, the
// parametrization components, and the chart itself.
struct EliminationResult {
  LaurentPolynomial potential;            // in n-k chart variables
  std::vector<LaurentPolynomial> param;   // f_1..f_k, chart variables
  std::vector<LatticeVector> chart;       // chart basis of M_V in M
  Basis basis;                            // the completed basis used
};

// Rewrites the model in the collection's completed basis, solves each
// constraint for its own variable and substitutes into the potential.
// Throws invariant_violation when an exponent violates the sign pattern the
// amenable conditions guarantee.
EliminationResult eliminate(const GiventalModel& model,
                            const AmenableCollection& c);

// Symbolic check that substituting the parametrization into every
// constraint yields the constant one.
bool eliminate_parametrizes_constraints(const GiventalModel& model,
                                        const AmenableCollection& c,
                                        const EliminationResult& e);

// All points p + u_1 + ... + u_l with p in the last part and u_j drawn with
// repetition from the earlier parts, orthogonal to every v_i; staged
// exactly as in the structural proof, reported in chart coordinates.
// Independent of the polynomial arithmetic path.
std::vector<LatticeVector> brute_force_support(const NefPartition& p,
                                               const AmenableCollection& c);

// Newton polytope of lp equals delta_v as vertex sets. Throws chart_error
// when the charts differ.
bool check_newton_equals_deltaV(const EliminationResult& e,
                                const DegenerationData& d);

Polytope newton_polytope(const LaurentPolynomial& p);

}  // namespace toric
