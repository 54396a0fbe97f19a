#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Sparse exact-coefficient Laurent polynomial. Terms are keyed by exponent
// vector in lexicographic order; zero coefficients are never stored.
struct LaurentPolynomial {
  std::vector<std::string> vars;
  std::map<IntVec, Rat> terms;

  int nvars() const { return static_cast<int>(vars.size()); }
  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  bool is_constant() const;

  static LaurentPolynomial zero(std::vector<std::string> vars);
  static LaurentPolynomial constant(std::vector<std::string> vars,
                                    const Rat& c);
  static LaurentPolynomial monomial(std::vector<std::string> vars, IntVec exp,
                                    const Rat& c);
  static LaurentPolynomial variable(std::vector<std::string> vars, int i);

  void add_term(const IntVec& exp, const Rat& c);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  bool operator==(const LaurentPolynomial& o) const = default;

  // Nonnegative power.
  LaurentPolynomial pow(unsigned long e) const;

  // Partial derivative in variable i.
  LaurentPolynomial derivative(int i) const;

  // Exact evaluation; nullopt when a negative power of zero occurs.
  std::optional<Rat> evaluate(const RatVec& point) const;

  // Exponent vectors of the support, as lattice points.
  std::vector<LatticeVector> support() const;

  // Canonical human-readable form, terms in lexicographic exponent order.
  std::string str() const;
};

std::vector<std::string> make_vars(const std::string& prefix, int lo, int hi);

// Substitutes q for variable i of p. When q is not a single monomial, every
// exponent of variable i in p must be nonnegative; a nonzero monomial may be
// substituted into any exponent. Throws substitution_error otherwise.
LaurentPolynomial substitute(const LaurentPolynomial& p, int i,
                             const LaurentPolynomial& q);

// Quotient of Laurent polynomials. Never normalized by polynomial gcd;
// equality is decided by cross-multiplication.
struct RationalFunction {
  LaurentPolynomial num;
  LaurentPolynomial den;

  static RationalFunction from(LaurentPolynomial p);
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction pow(long e) const;  // negative allowed (nonzero num)
  RationalFunction derivative(int i) const;
  bool equals(const RationalFunction& o) const;
  bool equals(const LaurentPolynomial& p) const;
  // nullopt on poles (denominator zero or negative power of zero).
  std::optional<Rat> evaluate(const RatVec& point) const;
  std::string str() const;
};

// f with every variable replaced by the corresponding rational function, as
// a single fraction over a shared denominator.
RationalFunction compose(const LaurentPolynomial& f,
                         const std::vector<RationalFunction>& images);

}  // namespace toric
