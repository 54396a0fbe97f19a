#pragma once

#include <optional>
#include <vector>

#include "toric/numbers.hpp"

namespace toric {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;  // row-major
using RatMat = std::vector<RatVec>;

RatMat to_rat(const IntMat& m);
RatVec to_rat(const IntVec& v);

// Returns the integral vector q*v where q clears all denominators, divided by
// the content, i.e. the primitive integral vector on the same ray. v != 0.
IntVec primitive_direction(const RatVec& v);

int rat_rank(RatMat m);
Rat rat_det(RatMat m);

// Inverse of a square rational matrix; throws rank_error when singular.
RatMat rat_inverse(const RatMat& m);

// One solution x of a * x = b over the rationals, or nullopt when
// inconsistent. a is m x n, b has length m, x has length n.
std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b);

// Rational basis of the right kernel {x : a*x = 0}.
RatMat rat_kernel(const RatMat& a);

RatVec mat_vec(const RatMat& a, const RatVec& x);
RatMat mat_mul(const RatMat& a, const RatMat& b);
IntMat imat_mul(const IntMat& a, const IntMat& b);
Int imat_det(const IntMat& m);

// Smith normal form u * a * v = d with u, v unimodular and d diagonal with
// each diagonal entry dividing the next. vinv = v^{-1} is accumulated
// directly. Pivot choice is deterministic: smallest |entry|, ties broken by
// smallest row then column index.
struct SmithResult {
  IntMat u, v, vinv;
  std::vector<Int> divisors;  // nonnegative, length = rank
};
SmithResult smith_normal_form(const IntMat& a);

// Basis of the saturated lattice {x in Z^n : a*x = 0} (right kernel).
IntMat integer_kernel_basis(const IntMat& a);

// One integral solution of a*x = b, or nullopt when none exists.
std::optional<IntVec> integral_solve(const IntMat& a, const IntVec& b);

}  // namespace toric
