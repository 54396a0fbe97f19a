#pragma once

#include <optional>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/simplex.hpp"

namespace toric {

// Facet inequality <normal, x> <= offset. For polytopes with the origin in
// the interior, normals are stored primitive integral and offsets positive.
struct Facet {
  RatVec normal;
  Rat offset;
};

// A rational polytope given by its irredundant, lexicographically sorted
// vertex list. Facets are enumerated only when the polytope is
// full-dimensional and the ambient rank is within max_facet_rank.
struct Polytope {
  int ambient_rank = 0;
  int dim = 0;
  std::vector<RatVec> vertices;
  std::optional<std::vector<Facet>> facets;
  bool contains_origin_interior = false;

  bool operator==(const Polytope& o) const {
    return ambient_rank == o.ambient_rank && vertices == o.vertices;
  }
  // All vertices integral? (Needed for reflexivity and lattice use.)
  bool is_integral() const;
  std::vector<LatticeVector> lattice_vertices() const;
  bool contains(const RatVec& p) const;
};

inline constexpr int kDefaultMaxFacetRank = 8;

Polytope convex_hull(const std::vector<RatVec>& points,
                     int max_facet_rank = kDefaultMaxFacetRank);
Polytope convex_hull_lattice(const std::vector<LatticeVector>& points,
                             int max_facet_rank = kDefaultMaxFacetRank);

// True iff the full-dimensional integral polytope with 0 interior has all
// facets at lattice height one.
bool is_reflexive(const Polytope& p);

}  // namespace toric
