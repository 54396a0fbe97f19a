#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace toric {

// All lattice and coefficient arithmetic is exact. Int/Rat are the only
// numeric types used anywhere in the library; no floating point.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Serialized form of a rational: "p" when integral, otherwise "p/q".
inline std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

Rat rat_from_string(const std::string& s);

inline std::string int_to_string(const Int& n) { return n.get_str(); }

}  // namespace toric
