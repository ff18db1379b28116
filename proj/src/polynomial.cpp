#include "holochern/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace holochern {

namespace {

std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

std::map<VarList, std::weak_ptr<const VarList>>& intern_table() {
  static std::map<VarList, std::weak_ptr<const VarList>> t;
  return t;
}

}  // namespace

VarListPtr intern_vars(VarList names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::lock_guard<std::mutex> lock(intern_mutex());
  auto& table = intern_table();
  auto it = table.find(names);
  if (it != table.end()) {
    if (auto p = it->second.lock()) return p;
  }
  auto p = std::make_shared<const VarList>(names);
  table[names] = p;
  return p;
}

VarListPtr empty_vars() {
  static const VarListPtr e = intern_vars({});
  return e;
}

VarListPtr merge_vars(const VarListPtr& a, const VarListPtr& b) {
  if (a == b || b->empty()) return a;
  if (a->empty()) return b;
  VarList m;
  std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(m));
  if (m.size() == a->size()) return a;
  if (m.size() == b->size()) return b;
  return intern_vars(std::move(m));
}

int grlex_compare(const Exponents& a, const Exponents& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

namespace {

bool grlex_greater(const Term& x, const Term& y) { return grlex_compare(x.exp, y.exp) > 0; }

}  // namespace

Polynomial::Polynomial(const GaussianRational& c) : vars_(empty_vars()) {
  if (!c.is_zero()) terms_.push_back({{}, c});
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = intern_vars({name});
  p.terms_.push_back({{1}, GaussianRational(1)});
  return p;
}

Polynomial Polynomial::from_terms(VarListPtr vars, std::vector<Term> terms) {
  Polynomial p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

Polynomial Polynomial::monomial(VarListPtr vars, Exponents exp, GaussianRational coef) {
  Polynomial p;
  p.vars_ = std::move(vars);
  if (!coef.is_zero()) p.terms_.push_back({std::move(exp), std::move(coef)});
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), grlex_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_[0].exp) {
    if (e != 0) return false;
  }
  return true;
}

GaussianRational Polynomial::constant_term() const {
  if (terms_.empty()) return GaussianRational(0);
  const Term& last = terms_.back();
  for (int e : last.exp) {
    if (e != 0) return GaussianRational(0);
  }
  return last.coef;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_[0].exp) d += e;
  return d;
}

int Polynomial::degree_in(std::size_t v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[v]);
  return d;
}

Exponents Polynomial::min_exponents() const {
  Exponents m(vars_->size(), 0);
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], t.exp[k]);
  }
  return m;
}

std::vector<bool> Polynomial::used_vars() const {
  std::vector<bool> used(vars_->size(), false);
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (t.exp[k] != 0) used[k] = true;
    }
  }
  return used;
}

Polynomial Polynomial::with_vars(const VarListPtr& target) const {
  if (target == vars_) return *this;
  std::vector<std::size_t> pos(vars_->size());
  for (std::size_t k = 0; k < vars_->size(); ++k) {
    auto it = std::lower_bound(target->begin(), target->end(), (*vars_)[k]);
    if (it == target->end() || *it != (*vars_)[k]) {
      throw std::logic_error("with_vars: target misses variable " + (*vars_)[k]);
    }
    pos[k] = static_cast<std::size_t>(it - target->begin());
  }
  Polynomial p;
  p.vars_ = target;
  p.terms_.reserve(terms_.size());
  // Inserting constant columns preserves the grlex order.
  for (const auto& t : terms_) {
    Exponents e(target->size(), 0);
    for (std::size_t k = 0; k < pos.size(); ++k) e[pos[k]] = t.exp[k];
    p.terms_.push_back({std::move(e), t.coef});
  }
  return p;
}

Polynomial Polynomial::pruned() const {
  auto used = used_vars();
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return *this;
  VarList names;
  for (std::size_t k = 0; k < used.size(); ++k) {
    if (used[k]) names.push_back((*vars_)[k]);
  }
  Polynomial p;
  p.vars_ = intern_vars(std::move(names));
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e;
    e.reserve(p.vars_->size());
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (used[k]) e.push_back(t.exp[k]);
    }
    p.terms_.push_back({std::move(e), t.coef});
  }
  return p;
}

void unify(Polynomial& a, Polynomial& b) {
  if (a.vars() == b.vars()) return;
  VarListPtr m = merge_vars(a.vars(), b.vars());
  a = a.with_vars(m);
  b = b.with_vars(m);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

namespace {

// Merge of two descending term lists; sign selects addition or subtraction.
std::vector<Term> merge_terms(const std::vector<Term>& x, const std::vector<Term>& y, bool subtract) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int c;
    if (i == x.size()) {
      c = -1;
    } else if (j == y.size()) {
      c = 1;
    } else {
      c = grlex_compare(x[i].exp, y[j].exp);
    }
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      GaussianRational s = subtract ? x[i].coef - y[j].coef : x[i].coef + y[j].coef;
      if (!s.is_zero()) out.push_back({x[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  Polynomial b = o;
  unify(*this, b);
  terms_ = merge_terms(terms_, b.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  Polynomial b = o;
  unify(*this, b);
  terms_ = merge_terms(terms_, b.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a0, const Polynomial& b0) {
  if (a0.is_zero() || b0.is_zero()) return Polynomial();
  Polynomial a = a0, b = b0;
  unify(a, b);
  if (a.is_constant()) return b.scaled(a.terms_[0].coef);
  if (b.is_constant()) return a.scaled(b.terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  const std::size_t n = a.vars_->size();
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = x.exp[k] + y.exp[k];
      prod.push_back({std::move(e), x.coef * y.coef});
    }
  }
  return Polynomial::from_terms(a.vars_, std::move(prod));
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial p = *this;
  if (c.is_one()) return p;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Polynomial Polynomial::times_monomial(const Exponents& e, const GaussianRational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) t.exp[k] += e[k];
    t.coef *= c;
  }
  return p;
}

Polynomial Polynomial::div_monomial(const Exponents& e) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      t.exp[k] -= e[k];
      if (t.exp[k] < 0) throw std::domain_error("div_monomial: not divisible");
    }
  }
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(GaussianRational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[v] == 0) continue;
    Term d = t;
    d.coef *= GaussianRational(t.exp[v]);
    d.exp[v] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(vars_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  if (terms_[0].coef.is_one()) return *this;
  return scaled(terms_[0].coef.inverse());
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t v) const {
  int d = degree_in(v);
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(std::max(d, 0) + 1));
  for (const auto& t : terms_) {
    Term s = t;
    s.exp[v] = 0;
    parts[static_cast<std::size_t>(t.exp[v])].push_back(std::move(s));
  }
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(from_terms(vars_, std::move(p)));
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.vars_ == b.vars_) {
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (a.terms_[k].exp != b.terms_[k].exp || a.terms_[k].coef != b.terms_[k].coef) return false;
    }
    return true;
  }
  return (a - b).is_zero();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (t.exp[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[k];
      if (t.exp[k] != 1) mono += "^" + std::to_string(t.exp[k]);
    }
    std::string term;
    if (mono.empty()) {
      term = t.coef.to_string();
    } else if (t.coef.is_one()) {
      term = mono;
    } else if (t.coef == GaussianRational(-1)) {
      term = "-" + mono;
    } else {
      term = t.coef.to_string() + "*" + mono;
    }
    if (first) {
      s = term;
      first = false;
    } else if (term[0] == '-') {
      s += " - " + term.substr(1);
    } else {
      s += " + " + term;
    }
  }
  return s;
}

Polynomial divide_exact(const Polynomial& a0, const Polynomial& b0) {
  if (b0.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a0.is_zero()) return Polynomial();
  Polynomial a = a0, b = b0;
  unify(a, b);
  if (b.is_constant()) return a.scaled(b.leading().coef.inverse());
  if (b.size() == 1) return a.div_monomial(b.leading().exp).scaled(b.leading().coef.inverse());
  const Term& lb = b.leading();
  GaussianRational lbinv = lb.coef.inverse();
  std::vector<Term> quotient;
  Polynomial r = a;
  const std::size_t n = a.vars()->size();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Exponents e(n);
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = lr.exp[k] - lb.exp[k];
      if (e[k] < 0) throw std::domain_error("divide_exact: not divisible");
    }
    GaussianRational c = lr.coef * lbinv;
    r -= b.times_monomial(e, c);
    quotient.push_back({std::move(e), std::move(c)});
  }
  return Polynomial::from_terms(a.vars(), std::move(quotient));
}

namespace {

Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p viewed as a polynomial in v.
Polynomial content_in(const Polynomial& p, std::size_t v) {
  auto coeffs = p.coefficients_in(v);
  Polynomial g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable v.
Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, std::size_t v) {
  const int db = b.degree_in(v);
  Polynomial lcb = b.coefficients_in(v)[static_cast<std::size_t>(db)];
  const std::size_t n = b.vars()->size();
  while (!r.is_zero()) {
    const int dr = r.degree_in(v);
    if (dr < db) break;
    Polynomial lcr = r.coefficients_in(v)[static_cast<std::size_t>(dr)];
    Exponents e(n, 0);
    e[v] = dr - db;
    if (lcb.is_constant()) {
      // Field division keeps coefficient sizes bounded.
      r -= (lcr * b).times_monomial(e, lcb.constant_term().inverse());
    } else {
      r = lcb * r - lcr * b.times_monomial(e, GaussianRational(1));
    }
  }
  return r;
}

Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(GaussianRational(1));
  auto ua = a.used_vars();
  auto ub = b.used_vars();
  for (std::size_t k = 0; k < ua.size(); ++k) {
    if (ua[k] && !ub[k]) return gcd(content_in(a, k), b);
    if (ub[k] && !ua[k]) return gcd(a, content_in(b, k));
  }
  // Same variable support: eliminate the variable of lowest degree.
  std::size_t v = ua.size();
  int best = 0;
  for (std::size_t k = 0; k < ua.size(); ++k) {
    if (!ua[k]) continue;
    int d = std::min(a.degree_in(k), b.degree_in(k));
    if (v == ua.size() || d < best) {
      v = k;
      best = d;
    }
  }
  Polynomial ca = content_in(a, v);
  Polynomial cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial r0 = divide_exact(a, ca).monic();
  Polynomial r1 = divide_exact(b, cb).monic();
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  while (true) {
    Polynomial r = pseudo_remainder(r0, r1, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      r1 = Polynomial(GaussianRational(1));
      break;
    }
    r0 = std::move(r1);
    r1 = divide_exact(r, content_in(r, v)).monic();
  }
  return (c * r1).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a0, const Polynomial& b0) {
  if (a0.is_zero()) return b0.monic();
  if (b0.is_zero()) return a0.monic();
  Polynomial a = a0, b = b0;
  unify(a, b);
  if (a.is_constant() || b.is_constant()) return Polynomial(GaussianRational(1)).with_vars(a.vars());
  if (a.size() == 1 || b.size() == 1) {
    Exponents m = a.min_exponents();
    Exponents mb = b.min_exponents();
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], mb[k]);
    return Polynomial::monomial(a.vars(), m, GaussianRational(1));
  }
  Exponents ma = a.min_exponents();
  Exponents mb = b.min_exponents();
  Exponents m(ma.size());
  bool has_mono = false;
  for (std::size_t k = 0; k < m.size(); ++k) {
    m[k] = std::min(ma[k], mb[k]);
    if (ma[k] || mb[k]) has_mono = true;
  }
  if (has_mono) {
    a = a.div_monomial(ma);
    b = b.div_monomial(mb);
  }
  Polynomial g;
  if (a.size() == b.size() && a.monic() == b.monic()) {
    g = a.monic();
  } else {
    g = gcd_primitive(a, b);
  }
  if (g.vars() != a.vars()) g = g.with_vars(merge_vars(g.vars(), a.vars()));
  return g.times_monomial(m, GaussianRational(1)).monic();
}

}  // namespace holochern
