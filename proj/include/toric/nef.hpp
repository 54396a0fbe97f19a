#pragma once

#include "toric/fan.hpp"

namespace toric {

// A (Q-)nef partition E_1, ..., E_{k+1} of the rays of a complete fan, with
// one convex support function per part taking value 1 on the part's own rays
// and 0 on all others.
struct NefPartition {
  FanPtr fan;
  std::vector<std::vector<int>> parts;  // k+1 sorted ray-index sets
  std::vector<PLFunction> supports;
  std::vector<bool> integral;  // Cartier per part; false = Q-Cartier only

  int k() const { return static_cast<int>(parts.size()) - 1; }
  // Part index owning a ray.
  int part_of(int ray) const;
};

using NefPtr = std::shared_ptr<const NefPartition>;

// How verify_partition reads the defining condition on ray values: equality
// (value exactly delta_ij, the convention every construction here uses) or
// slack (>= delta_ij on the own part).
enum class NefMode { kEquality, kSlack };

// Solves the per-cone linear systems <u_C, rho> = [rho in part] for every
// part and glues the piecewise functions, checking upper convexity on rays.
// Throws partition_error when parts do not partition the rays and
// invariant_violation("not a nef partition") when some cone system is
// inconsistent or convexity fails.
NefPartition solve_supports(FanPtr fan, std::vector<std::vector<int>> parts);

// Full type-invariant check: parts partition the rays, each support is
// consistent, convex, and takes the delta values on rays.
bool verify_partition(const NefPartition& p, NefMode mode = NefMode::kEquality);

}  // namespace toric
