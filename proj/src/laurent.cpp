#include "toric/laurent.hpp"

#include <sstream>

#include "toric/errors.hpp"

namespace toric {

bool LaurentPolynomial::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() > 1) return false;
  for (const Int& e : terms.begin()->first)
    if (e != 0) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::zero(std::vector<std::string> vars) {
  return LaurentPolynomial{std::move(vars), {}};
}

LaurentPolynomial LaurentPolynomial::constant(std::vector<std::string> vars,
                                              const Rat& c) {
  LaurentPolynomial p{std::move(vars), {}};
  if (c != 0) p.terms.emplace(IntVec(p.vars.size(), 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<std::string> vars,
                                              IntVec exp, const Rat& c) {
  LaurentPolynomial p{std::move(vars), {}};
  if (exp.size() != p.vars.size())
    throw dimension_error("monomial exponent length mismatch");
  if (c != 0) p.terms.emplace(std::move(exp), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::vector<std::string> vars,
                                              int i) {
  IntVec e(vars.size(), 0);
  e[i] = 1;
  return monomial(std::move(vars), std::move(e), 1);
}

void LaurentPolynomial::add_term(const IntVec& exp, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(exp);
  if (it == terms.end()) {
    terms.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

namespace {

void check_same_space(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.vars != b.vars)
    throw dimension_error("polynomials in different variable spaces");
}

}  // namespace

LaurentPolynomial LaurentPolynomial::operator+(
    const LaurentPolynomial& o) const {
  check_same_space(*this, o);
  LaurentPolynomial r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(
    const LaurentPolynomial& o) const {
  check_same_space(*this, o);
  LaurentPolynomial r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(
    const LaurentPolynomial& o) const {
  check_same_space(*this, o);
  LaurentPolynomial r = zero(vars);
  IntVec e(vars.size());
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned long e) const {
  LaurentPolynomial r = constant(vars, 1);
  LaurentPolynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::derivative(int i) const {
  LaurentPolynomial r = zero(vars);
  for (const auto& [e, c] : terms) {
    if (e[i] == 0) continue;
    IntVec ne = e;
    ne[i] -= 1;
    r.add_term(ne, c * Rat(e[i]));
  }
  return r;
}

std::optional<Rat> LaurentPolynomial::evaluate(const RatVec& point) const {
  if (point.size() != vars.size())
    throw dimension_error("evaluation point has wrong length");
  Rat sum = 0;
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0) {
        if (e[i] < 0) return std::nullopt;
        t = 0;
        break;
      }
      Rat base = e[i] > 0 ? point[i] : Rat(1) / point[i];
      unsigned long m = mpz_get_ui(abs(Int(e[i])).get_mpz_t());
      for (unsigned long j = 0; j < m; ++j) t *= base;
    }
    sum += t;
  }
  return sum;
}

std::vector<LatticeVector> LaurentPolynomial::support() const {
  std::vector<LatticeVector> s;
  s.reserve(terms.size());
  for (const auto& [e, c] : terms) s.push_back(LatticeVector{e});
  return s;
}

std::string LaurentPolynomial::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mon;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += vars[i];
      if (e[i] != 1) mon += "^" + e[i].get_str();
    }
    if (mon.empty()) {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a) << "*";
      os << mon;
    }
  }
  return os.str();
}

std::vector<std::string> make_vars(const std::string& prefix, int lo, int hi) {
  std::vector<std::string> v;
  for (int i = lo; i <= hi; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

LaurentPolynomial substitute(const LaurentPolynomial& p, int i,
                             const LaurentPolynomial& q) {
  check_same_space(p, q);
  if (q.is_zero()) throw substitution_error("substituting zero");
  bool monomial = q.is_monomial();
  if (!monomial) {
    for (const auto& [e, c] : p.terms)
      if (e[i] < 0)
        throw substitution_error(
            "negative power of a non-monomial substituend");
  }
  // Group terms of p by the exponent of variable i and multiply by powers
  // of q; powers are cached.
  std::map<Int, LaurentPolynomial> groups;
  for (const auto& [e, c] : p.terms) {
    IntVec base = e;
    Int k = e[i];
    base[i] = 0;
    auto [it, fresh] = groups.emplace(k, LaurentPolynomial::zero(p.vars));
    it->second.add_term(base, c);
  }
  LaurentPolynomial result = LaurentPolynomial::zero(p.vars);
  for (const auto& [k, g] : groups) {
    LaurentPolynomial qk = LaurentPolynomial::constant(p.vars, 1);
    if (k > 0) {
      qk = q.pow(mpz_get_ui(k.get_mpz_t()));
    } else if (k < 0) {
      // Monomial inverse.
      const auto& [me, mc] = *q.terms.begin();
      IntVec inv(me.size());
      for (size_t j = 0; j < me.size(); ++j) inv[j] = -me[j];
      LaurentPolynomial qinv =
          LaurentPolynomial::monomial(p.vars, inv, Rat(1) / mc);
      qk = qinv.pow(mpz_get_ui(Int(-k).get_mpz_t()));
    }
    result = result + g * qk;
  }
  return result;
}

RationalFunction RationalFunction::from(LaurentPolynomial p) {
  LaurentPolynomial one = LaurentPolynomial::constant(p.vars, 1);
  return {std::move(p), std::move(one)};
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return {num * o.den + o.num * den, den * o.den};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num * o.num, den * o.den};
}

RationalFunction RationalFunction::pow(long e) const {
  if (e >= 0)
    return {num.pow(static_cast<unsigned long>(e)),
            den.pow(static_cast<unsigned long>(e))};
  if (num.is_zero()) throw substitution_error("negative power of zero");
  return {den.pow(static_cast<unsigned long>(-e)),
          num.pow(static_cast<unsigned long>(-e))};
}

RationalFunction RationalFunction::derivative(int i) const {
  // (n/d)' = (n'd - nd')/d^2
  return {num.derivative(i) * den - num * den.derivative(i), den * den};
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return (num * o.den) == (o.num * den);
}

bool RationalFunction::equals(const LaurentPolynomial& p) const {
  return num == (p * den);
}

std::optional<Rat> RationalFunction::evaluate(const RatVec& point) const {
  auto d = den.evaluate(point);
  if (!d || *d == 0) return std::nullopt;
  auto n = num.evaluate(point);
  if (!n) return std::nullopt;
  return *n / *d;
}

std::string RationalFunction::str() const {
  return "(" + num.str() + ") / (" + den.str() + ")";
}

RationalFunction compose(const LaurentPolynomial& f,
                         const std::vector<RationalFunction>& images) {
  if (images.size() != f.vars.size())
    throw dimension_error("compose: one image per variable required");
  if (f.terms.empty())
    return RationalFunction::from(
        LaurentPolynomial::zero(images.empty() ? std::vector<std::string>{}
                                               : images[0].num.vars));
  std::vector<std::string> vars = images.empty() ? std::vector<std::string>{}
                                                 : images[0].num.vars;
  size_t m = images.size();
  // Shared denominator D = prod num_j^{Aj} den_j^{Bj} with Aj/Bj the largest
  // negative/positive exponents of variable j in f.
  std::vector<long> amax(m, 0), bmax(m, 0);
  for (const auto& [e, c] : f.terms)
    for (size_t j = 0; j < m; ++j) {
      long ej = static_cast<long>(mpz_get_si(e[j].get_mpz_t()));
      if (ej > 0) bmax[j] = std::max(bmax[j], ej);
      if (ej < 0) amax[j] = std::max(amax[j], -ej);
    }
  // Power caches.
  auto powers = [&](const LaurentPolynomial& p, long top) {
    std::vector<LaurentPolynomial> pw;
    pw.push_back(LaurentPolynomial::constant(vars, 1));
    for (long i = 1; i <= top; ++i) pw.push_back(pw.back() * p);
    return pw;
  };
  std::vector<std::vector<LaurentPolynomial>> num_pow(m), den_pow(m);
  for (size_t j = 0; j < m; ++j) {
    num_pow[j] = powers(images[j].num, bmax[j] + amax[j]);
    den_pow[j] = powers(images[j].den, bmax[j] + amax[j]);
  }
  LaurentPolynomial n = LaurentPolynomial::zero(vars);
  for (const auto& [e, c] : f.terms) {
    LaurentPolynomial t = LaurentPolynomial::constant(vars, c);
    for (size_t j = 0; j < m; ++j) {
      long ej = static_cast<long>(mpz_get_si(e[j].get_mpz_t()));
      long pn = (ej > 0 ? ej : 0) + (amax[j] - (ej < 0 ? -ej : 0));
      long pd = (ej < 0 ? -ej : 0) + (bmax[j] - (ej > 0 ? ej : 0));
      if (pn > 0) t = t * num_pow[j][pn];
      if (pd > 0) t = t * den_pow[j][pd];
    }
    n = n + t;
  }
  LaurentPolynomial d = LaurentPolynomial::constant(vars, 1);
  for (size_t j = 0; j < m; ++j) {
    if (amax[j] > 0) d = d * num_pow[j][amax[j]];
    if (bmax[j] > 0) d = d * den_pow[j][bmax[j]];
  }
  return {std::move(n), std::move(d)};
}

}  // namespace toric
