#include "holochern/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace holochern {

namespace {

void prune_pair(Polynomial& n, Polynomial& d) {
  unify(n, d);
  auto un = n.used_vars();
  auto ud = d.used_vars();
  bool all = true;
  for (std::size_t k = 0; k < un.size(); ++k) {
    if (!un[k] && !ud[k]) all = false;
  }
  if (all) return;
  VarList keep;
  for (std::size_t k = 0; k < un.size(); ++k) {
    if (un[k] || ud[k]) keep.push_back((*n.vars())[k]);
  }
  VarListPtr target = intern_vars(std::move(keep));
  n = n.pruned().with_vars(target);
  d = d.pruned().with_vars(target);
}

}  // namespace

RationalFunction::RationalFunction(const GaussianRational& c) : num_(c), den_(GaussianRational(1)) {}

RationalFunction::RationalFunction(const Polynomial& p) {
  if (p.is_zero()) {
    den_ = Polynomial(GaussianRational(1));
    return;
  }
  num_ = p.pruned();
  den_ = Polynomial(GaussianRational(1)).with_vars(num_.vars());
}

RationalFunction RationalFunction::variable(const std::string& name) {
  return RationalFunction(Polynomial::variable(name));
}

// Cancels the gcd, makes den monic and prunes unused variables.
RationalFunction RationalFunction::make(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RationalFunction f;
  if (num.is_zero()) return f;
  unify(num, den);
  if (!den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  GaussianRational lc = den.leading().coef;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  prune_pair(num, den);
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

GaussianRational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a nonconstant function");
  return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return make(den_, num_);
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction f;
  Polynomial n = num_.pow(static_cast<unsigned>(k));
  if (n.is_zero()) return f;
  Polynomial d = den_.pow(static_cast<unsigned>(k));
  // Powers of coprime polynomials stay coprime and den stays monic.
  unify(n, d);
  f.num_ = std::move(n);
  f.den_ = std::move(d);
  if (f.num_.is_constant() && f.den_.is_constant()) {
    f.num_ = f.num_.pruned();
    f.den_ = f.den_.pruned();
  }
  return f;
}

RationalFunction RationalFunction::derivative(const std::string& var) const {
  const VarList& vs = *vars();
  auto it = std::lower_bound(vs.begin(), vs.end(), var);
  if (it == vs.end() || *it != var) return RationalFunction();
  std::size_t v = static_cast<std::size_t>(it - vs.begin());
  Polynomial dn = num_.derivative(v);
  if (den_.is_constant()) return make(dn, den_);
  Polynomial dd = den_.derivative(v);
  return make(dn * den_ - num_ * dd, den_ * den_);
}

namespace {

struct SubstValue {
  Polynomial p;
  Polynomial q;
  std::vector<Polynomial> p_pow;
  std::vector<Polynomial> q_pow;
};

// Returns (N, D) with P(values) = N / D, D a product of powers of the q's.
std::pair<Polynomial, Polynomial> substitute_poly(const Polynomial& poly, std::vector<SubstValue*>& vals) {
  const std::size_t n = poly.vars()->size();
  std::vector<int> maxdeg(n, 0);
  for (std::size_t k = 0; k < n; ++k) maxdeg[k] = vals[k] ? std::max(poly.degree_in(k), 0) : 0;
  for (std::size_t k = 0; k < n; ++k) {
    SubstValue* s = vals[k];
    if (!s) continue;
    while (static_cast<int>(s->p_pow.size()) <= maxdeg[k]) {
      s->p_pow.push_back(s->p_pow.empty() ? Polynomial(GaussianRational(1)) : s->p_pow.back() * s->p);
      s->q_pow.push_back(s->q_pow.empty() ? Polynomial(GaussianRational(1)) : s->q_pow.back() * s->q);
    }
  }
  Polynomial num;
  for (const auto& t : poly.terms()) {
    Exponents kept(n, 0);
    Polynomial term(t.coef);
    for (std::size_t k = 0; k < n; ++k) {
      if (!vals[k]) {
        kept[k] = t.exp[k];
        continue;
      }
      const int e = t.exp[k];
      if (e > 0) term = term * vals[k]->p_pow[static_cast<std::size_t>(e)];
      if (maxdeg[k] - e > 0) term = term * vals[k]->q_pow[static_cast<std::size_t>(maxdeg[k] - e)];
    }
    bool any = false;
    for (int e : kept) any = any || e != 0;
    if (any) term = term * Polynomial::monomial(poly.vars(), kept, GaussianRational(1));
    num += term;
  }
  Polynomial den(GaussianRational(1));
  for (std::size_t k = 0; k < n; ++k) {
    if (vals[k] && maxdeg[k] > 0) den = den * vals[k]->q_pow[static_cast<std::size_t>(maxdeg[k])];
  }
  return {num, den};
}

}  // namespace

RationalFunction RationalFunction::substitute(const std::map<std::string, RationalFunction>& values) const {
  if (is_zero()) return *this;
  const VarList& vs = *vars();
  std::vector<SubstValue> storage;
  storage.reserve(vs.size());
  std::vector<SubstValue*> vals(vs.size(), nullptr);
  bool any = false;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    auto it = values.find(vs[k]);
    if (it == values.end()) continue;
    storage.push_back({it->second.num(), it->second.den(), {}, {}});
    vals[k] = &storage.back();
    any = true;
  }
  if (!any) return *this;
  auto [nn, nd] = substitute_poly(num_, vals);
  auto [dn, dd] = substitute_poly(den_, vals);
  if (dn.is_zero()) throw std::domain_error("substitution produces a zero denominator");
  return make(nn * dd, nd * dn);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  return f;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    Polynomial s = num_ + o.num_;
    return *this = make(std::move(s), Polynomial(GaussianRational(1)));
  }
  if (den_ == o.den_) return *this = make(num_ + o.num_, den_);
  Polynomial g = gcd(den_, o.den_);
  Polynomial b = divide_exact(den_, g);
  Polynomial d = divide_exact(o.den_, g);
  return *this = make(num_ * d + o.num_ * b, b * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  // Cross cancellation keeps the intermediate products coprime.
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial a = g1.is_one() ? num_ : divide_exact(num_, g1);
  Polynomial d = g1.is_one() ? o.den_ : divide_exact(o.den_, g1);
  Polynomial c = g2.is_one() ? o.num_ : divide_exact(o.num_, g2);
  Polynomial b = g2.is_one() ? den_ : divide_exact(den_, g2);
  Polynomial n = a * c;
  Polynomial m = b * d;
  GaussianRational lc = m.leading().coef;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    n = n.scaled(inv);
    m = m.scaled(inv);
  }
  prune_pair(n, m);
  num_ = std::move(n);
  den_ = std::move(m);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

namespace {

bool single_atom(const Polynomial& p) {
  if (p.size() != 1 || !p.leading().coef.is_one()) return false;
  int nonzero = 0;
  for (int e : p.leading().exp) nonzero += e != 0;
  return nonzero == 1;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!single_atom(den_)) d = "(" + d + ")";
  return n + " / " + d;
}

RationalFunction rf_normalize(const RationalFunction& f) { return RationalFunction::make(f.num(), f.den()); }

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace holochern
