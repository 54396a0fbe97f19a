#include "toric/nef.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

int NefPartition::part_of(int ray) const {
  for (size_t i = 0; i < parts.size(); ++i)
    if (std::binary_search(parts[i].begin(), parts[i].end(), ray))
      return static_cast<int>(i);
  return -1;
}

namespace {

void check_is_partition(const Fan& fan,
                        const std::vector<std::vector<int>>& parts) {
  std::vector<int> seen(fan.rays.size(), 0);
  for (const auto& part : parts) {
    if (part.empty()) throw partition_error("empty partition part");
    for (int r : part) {
      if (r < 0 || r >= static_cast<int>(fan.rays.size()))
        throw partition_error("ray index out of range");
      ++seen[r];
    }
  }
  for (size_t r = 0; r < seen.size(); ++r) {
    if (seen[r] == 0) throw partition_error("ray missing from all parts");
    if (seen[r] > 1) throw partition_error("ray assigned to several parts");
  }
}

}  // namespace

NefPartition solve_supports(FanPtr fan, std::vector<std::vector<int>> parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  check_is_partition(*fan, parts);
  NefPartition np;
  np.fan = fan;
  np.parts = parts;
  size_t ncones = fan->maximal_cones.size();
  for (const auto& part : parts) {
    PLFunction phi;
    phi.fan = fan;
    phi.u.resize(ncones);
    bool integral = true;
    for (size_t c = 0; c < ncones; ++c) {
      const auto& cone = fan->maximal_cones[c];
      RatMat a;
      RatVec b;
      for (int r : cone) {
        a.push_back(to_rat(fan->rays[r].c));
        b.push_back(std::binary_search(part.begin(), part.end(), r) ? 1 : 0);
      }
      auto u = rat_solve(a, b);
      if (!u)
        throw invariant_violation(
            "not a nef partition: inconsistent cone system");
      // Maximal cones of a complete fan are full-dimensional, so the
      // solution is unique; verify to catch malformed fans.
      if (rat_rank(a) != fan->rank)
        throw geometry_error("maximal cone is not full-dimensional");
      phi.u[c] = *u;
      for (const Rat& q : *u)
        if (!is_integral(q)) integral = false;
    }
    // Upper convexity as max-formula agreement on every ray.
    phi.convex = true;
    for (size_t r = 0; r < fan->rays.size(); ++r) {
      Rat expected =
          std::binary_search(part.begin(), part.end(), static_cast<int>(r))
              ? 1
              : 0;
      RatVec x = to_rat(fan->rays[r].c);
      for (const RatVec& uc : phi.u)
        if (pair(uc, x) > expected) phi.convex = false;
    }
    if (!phi.convex)
      throw invariant_violation("not a nef partition: support not convex");
    np.supports.push_back(std::move(phi));
    np.integral.push_back(integral);
  }
  return np;
}

bool verify_partition(const NefPartition& p, NefMode mode) {
  const Fan& fan = *p.fan;
  check_is_partition(fan, p.parts);
  if (p.supports.size() != p.parts.size()) return false;
  for (size_t i = 0; i < p.parts.size(); ++i) {
    const PLFunction& phi = p.supports[i];
    if (phi.u.size() != fan.maximal_cones.size()) return false;
    if (!pl_consistent(phi)) return false;
    for (size_t r = 0; r < fan.rays.size(); ++r) {
      Rat delta = std::binary_search(p.parts[i].begin(), p.parts[i].end(),
                                     static_cast<int>(r))
                      ? 1
                      : 0;
      RatVec x = to_rat(fan.rays[r].c);
      // Value on the cone(s) owning the ray.
      Rat val;
      bool found = false;
      Rat maxval;
      bool first = true;
      for (size_t c = 0; c < fan.maximal_cones.size(); ++c) {
        Rat v = pair(phi.u[c], x);
        if (first || v > maxval) maxval = v;
        first = false;
        if (std::binary_search(fan.maximal_cones[c].begin(),
                               fan.maximal_cones[c].end(),
                               static_cast<int>(r))) {
          val = v;
          found = true;
        }
      }
      if (!found) return false;
      if (mode == NefMode::kEquality) {
        if (val != delta) return false;
      } else {
        if (val < delta) return false;
      }
      if (maxval != val) return false;  // convexity on rays
    }
  }
  return true;
}

}  // namespace toric
