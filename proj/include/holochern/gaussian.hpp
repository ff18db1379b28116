#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>

namespace holochern {

// Exact element of Q(i). Both parts are canonical mpq_class values.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational imaginary_unit() { return GaussianRational(0, 1); }
  static GaussianRational fraction(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Parseable canonical text: "3/2", "-i", "3/2*i", "(1 + 2*i)".
  std::string to_string() const;
  // True when to_string() needs no parentheses as a factor of a product.
  bool is_atomic() const { return is_real() || sgn(re_) == 0; }

  std::size_t hash() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

}  // namespace holochern
