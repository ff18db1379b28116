#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "holochern/gaussian.hpp"

namespace holochern {

using VarList = std::vector<std::string>;
// Interned, sorted, duplicate-free variable list. Equal lists share one pointer.
using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr intern_vars(VarList names);
VarListPtr empty_vars();
VarListPtr merge_vars(const VarListPtr& a, const VarListPtr& b);

using Exponents = std::vector<int>;

// Graded lexicographic comparison; the first variable is the most significant.
int grlex_compare(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exp;
  GaussianRational coef;
};

// Sparse multivariate polynomial over Q(i). Terms are stored in strictly
// descending grlex order with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() : vars_(empty_vars()) {}
  explicit Polynomial(const GaussianRational& c);
  static Polynomial variable(const std::string& name);
  static Polynomial from_terms(VarListPtr vars, std::vector<Term> terms);
  static Polynomial monomial(VarListPtr vars, Exponents exp, GaussianRational coef);

  const VarListPtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coef.is_one(); }
  GaussianRational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(std::size_t v) const;
  Exponents min_exponents() const;
  // Indices of variables that occur with a positive exponent.
  std::vector<bool> used_vars() const;

  // Re-expresses the polynomial over a superset of its variables.
  Polynomial with_vars(const VarListPtr& target) const;
  // Drops variables that do not occur.
  Polynomial pruned() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const GaussianRational& c) const;
  Polynomial times_monomial(const Exponents& e, const GaussianRational& c) const;
  // Requires every term to be divisible by x^e.
  Polynomial div_monomial(const Exponents& e) const;
  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t v) const;
  Polynomial monic() const;

  // c[k] is the coefficient of v^k as a polynomial not involving v.
  std::vector<Polynomial> coefficients_in(std::size_t v) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void canonicalize();

  VarListPtr vars_;
  std::vector<Term> terms_;
};

// Brings a and b onto a common variable list.
void unify(Polynomial& a, Polynomial& b);

// Quotient of an exact division; throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace holochern
