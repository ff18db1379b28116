#pragma once

#include <map>
#include <string>
#include <vector>

#include "holochern/polynomial.hpp"

namespace holochern {

// Exact rational function over Q(i).
// Invariants: gcd(num, den) = 1, den has leading grlex coefficient 1,
// zero is 0/1, and both parts share a variable list holding only used variables.
class RationalFunction {
 public:
  RationalFunction() : den_(GaussianRational(1)) {}
  RationalFunction(const GaussianRational& c);  // NOLINT
  RationalFunction(long c) : RationalFunction(GaussianRational(c)) {}  // NOLINT
  explicit RationalFunction(const Polynomial& p);
  static RationalFunction variable(const std::string& name);
  // Throws std::domain_error on a zero denominator.
  static RationalFunction make(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const VarListPtr& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  GaussianRational constant_value() const;

  RationalFunction inverse() const;
  RationalFunction pow(int k) const;
  RationalFunction derivative(const std::string& var) const;
  // Simultaneous substitution; unlisted variables stay as they are.
  RationalFunction substitute(const std::map<std::string, RationalFunction>& values) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // Canonical text "num / den"; parse_expr inverts it exactly.
  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction rf_normalize(const RationalFunction& f);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace holochern
