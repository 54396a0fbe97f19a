#pragma once

#include "toric/linalg.hpp"

namespace toric {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status;
  Rat value;  // objective at optimum
  RatVec x;
};

// Minimizes c'x subject to a x = b, x >= 0, with exact rational arithmetic.
// Two-phase tableau simplex with Bland's rule (always terminates).
LpSolution lp_solve(const RatMat& a, const RatVec& b, const RatVec& c);

// Feasibility of a x = b, x >= 0.
bool lp_feasible(const RatMat& a, const RatVec& b);

// Minimizes c't subject to g t <= h with t free (variables split internally).
LpSolution lp_minimize_general(const RatMat& g, const RatVec& h,
                               const RatVec& c);

// x in cone(generators)? Generators are the columns-as-rows list.
bool in_cone(const std::vector<RatVec>& generators, const RatVec& x);

// p in conv(points)?
bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& p);

}  // namespace toric
