#include "toric/lg.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"

namespace toric {

GiventalModel build_givental(NefPtr partition, const CoefficientRule& rule) {
  const NefPartition& p = *partition;
  const Fan& fan = *p.fan;
  int n = fan.rank;
  int k = p.k();
  std::vector<Rat> coeffs(fan.rays.size(), 1);
  switch (rule.kind) {
    case CoefficientRule::Kind::kUnit:
      break;
    case CoefficientRule::Kind::kExplicit:
      if (rule.values.size() != fan.rays.size())
        throw coefficient_error("one coefficient per ray required");
      coeffs = rule.values;
      break;
    case CoefficientRule::Kind::kPower: {
      if (!rule.phi) throw coefficient_error("power rule needs a function");
      if (rule.t <= 0) throw coefficient_error("t must be positive");
      for (size_t r = 0; r < fan.rays.size(); ++r) {
        Rat h = pl_eval(*rule.phi, fan.rays[r]);
        if (!is_integral(h))
          throw coefficient_error("power rule needs integral values on rays");
        long e = static_cast<long>(mpz_get_si(h.get_num().get_mpz_t()));
        Rat a = 1;
        for (long i = 0; i < (e > 0 ? e : -e); ++i) a *= rule.t;
        coeffs[r] = e >= 0 ? a : Rat(1) / a;
      }
      break;
    }
  }
  for (const Rat& a : coeffs)
    if (a <= 0)
      throw coefficient_error(
          "coefficients must be positive (no-cancellation invariant)");

  std::vector<std::string> vars = make_vars("x", 1, n);
  GiventalModel m;
  m.partition = partition;
  m.coefficients = coeffs;
  for (int i = 0; i < k; ++i) {
    LaurentPolynomial c = LaurentPolynomial::zero(vars);
    for (int r : p.parts[i]) c.add_term(fan.rays[r].c, coeffs[r]);
    m.constraints.push_back(std::move(c));
  }
  LaurentPolynomial w = LaurentPolynomial::zero(vars);
  for (int r : p.parts[k]) w.add_term(fan.rays[r].c, coeffs[r]);
  m.potential = std::move(w);
  return m;
}

namespace {

// Exponents rewritten in the completed basis: exponent of x^rho becomes the
// pairing vector (<v_j, rho>)_j.
LaurentPolynomial rewrite_in_basis(const LaurentPolynomial& p,
                                   const Basis& b,
                                   const std::vector<std::string>& vars) {
  LaurentPolynomial out = LaurentPolynomial::zero(vars);
  for (const auto& [e, c] : p.terms) {
    IntVec ne(b.rank());
    for (int i = 0; i < b.rank(); ++i)
      ne[i] = pair(b.rows[i], LatticeVector{e});
    out.add_term(ne, c);
  }
  return out;
}

// Drop the first k (identically zero) exponent slots.
LaurentPolynomial project_chart(const LaurentPolynomial& p, int k,
                                const std::vector<std::string>& vars) {
  LaurentPolynomial out = LaurentPolynomial::zero(vars);
  for (const auto& [e, c] : p.terms) {
    for (int i = 0; i < k; ++i)
      if (e[i] != 0)
        throw invariant_violation("eliminated variable survived");
    out.add_term(IntVec(e.begin() + k, e.end()), c);
  }
  return out;
}

}  // namespace

EliminationResult eliminate(const GiventalModel& model,
                            const AmenableCollection& c) {
  const NefPartition& p = *model.partition;
  if (c.partition.get() != &p)
    throw input_error("collection is not subordinate to the model partition");
  if (!verify_amenable(p, c.vectors))
    throw input_error("collection is not amenable");
  int n = p.fan->rank;
  int k = p.k();
  std::vector<std::string> full = make_vars("y", 1, n);
  std::vector<std::string> chart_vars = make_vars("y", k + 1, n);

  // Constraint i in basis coordinates: every monomial has exponent -1 in
  // slot i, zero in slots (i, k], nonnegative below i.
  std::vector<LaurentPolynomial> solved;  // f_i, full variable space
  for (int i = 0; i < k; ++i) {
    LaurentPolynomial ci = rewrite_in_basis(model.constraints[i],
                                            c.completion, full);
    LaurentPolynomial fi = LaurentPolynomial::zero(full);
    for (const auto& [e, coef] : ci.terms) {
      if (e[i] != -1)
        throw invariant_violation("constraint exponent pattern violated");
      for (int j = 0; j < k; ++j) {
        if (j < i && e[j] < 0)
          throw invariant_violation("constraint exponent pattern violated");
        if (j > i && e[j] != 0)
          throw invariant_violation("constraint exponent pattern violated");
      }
      IntVec ne = e;
      ne[i] = 0;
      fi.add_term(ne, coef);
    }
    // Substitute the already-solved earlier variables.
    for (int j = 0; j < i; ++j) fi = substitute(fi, j, solved[j]);
    solved.push_back(std::move(fi));
  }

  LaurentPolynomial w = rewrite_in_basis(model.potential, c.completion, full);
  for (const auto& [e, coef] : w.terms)
    for (int j = 0; j < k; ++j)
      if (e[j] < 0)
        throw invariant_violation("potential exponent pattern violated");
  for (int j = 0; j < k; ++j) w = substitute(w, j, solved[j]);

  EliminationResult r;
  r.basis = c.completion;
  std::vector<LatticeVector> dual = c.completion.dual_columns();
  r.chart.assign(dual.begin() + k, dual.end());
  r.potential = project_chart(w, k, chart_vars);
  for (int i = 0; i < k; ++i)
    r.param.push_back(project_chart(solved[i], k, chart_vars));
  return r;
}

bool eliminate_parametrizes_constraints(const GiventalModel& model,
                                        const AmenableCollection& c,
                                        const EliminationResult& e) {
  int n = model.partition->fan->rank;
  int k = model.partition->k();
  std::vector<std::string> full = make_vars("y", 1, n);
  std::vector<std::string> chart_vars = make_vars("y", k + 1, n);
  std::vector<RationalFunction> images;
  for (int i = 0; i < k; ++i)
    images.push_back(RationalFunction::from(e.param[i]));
  for (int i = k; i < n; ++i)
    images.push_back(
        RationalFunction::from(LaurentPolynomial::variable(chart_vars, i - k)));
  LaurentPolynomial one = LaurentPolynomial::constant(chart_vars, 1);
  for (int i = 0; i < k; ++i) {
    LaurentPolynomial ci =
        rewrite_in_basis(model.constraints[i], c.completion, full);
    RationalFunction composed = compose(ci, images);
    if (!composed.equals(one)) return false;
  }
  return true;
}

std::vector<LatticeVector> brute_force_support(const NefPartition& p,
                                               const AmenableCollection& c) {
  const Fan& fan = *p.fan;
  int k = p.k();
  // Start from the last part's points and absorb one part at a time, from
  // part k down to part 1, adding b copies of part i to every point with
  // <v_i, q> = b. Mirrors the order in which the potential is reduced.
  std::set<IntVec> current;
  for (int r : p.parts[k]) current.insert(fan.rays[r].c);
  for (int i = k - 1; i >= 0; --i) {
    const DualVector& v = c.vectors[i];
    std::vector<IntVec> part_pts;
    for (int r : p.parts[i]) part_pts.push_back(fan.rays[r].c);
    std::set<IntVec> next;
    for (const IntVec& q : current) {
      Int b = pair(v, LatticeVector{q});
      if (b < 0)
        throw invariant_violation("negative grading in staged support");
      // b-fold Minkowski sums of the part added to q.
      std::set<IntVec> layer{q};
      for (Int step = 0; step < b; ++step) {
        std::set<IntVec> grown;
        for (const IntVec& x : layer)
          for (const IntVec& u : part_pts) {
            IntVec y(x.size());
            for (size_t t = 0; t < x.size(); ++t) y[t] = x[t] + u[t];
            grown.insert(std::move(y));
          }
        layer = std::move(grown);
      }
      next.insert(layer.begin(), layer.end());
    }
    current = std::move(next);
  }
  // Express in chart coordinates via the dual completion.
  std::vector<LatticeVector> out;
  int n = fan.rank;
  for (const IntVec& q : current) {
    IntVec y(n - k);
    LatticeVector m{q};
    for (int j = k; j < n; ++j) y[j - k] = pair(c.completion.rows[j], m);
    out.push_back(LatticeVector{std::move(y)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polytope newton_polytope(const LaurentPolynomial& p) {
  if (p.is_zero()) throw degenerate_input_error("Newton polytope of zero");
  std::vector<RatVec> pts;
  for (const auto& [e, coef] : p.terms) pts.push_back(to_rat(e));
  return convex_hull(pts);
}

bool check_newton_equals_deltaV(const EliminationResult& e,
                                const DegenerationData& d) {
  if (e.chart != d.chart)
    throw chart_error("elimination and degeneration use different charts");
  Polytope np = newton_polytope(e.potential);
  return np == d.delta_v;
}

}  // namespace toric
