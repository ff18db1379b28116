#include "holochern/gaussian.hpp"

#include <functional>
#include <stdexcept>

namespace holochern {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q, 0);
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class n = re_ * re_ + im_ * im_;
  return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::string imag_text(const mpq_class& q) {
  if (q == 1) return "i";
  if (q == -1) return "-i";
  return q.get_str() + "*i";
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_text(im_);
  std::string s = "(" + re_.get_str();
  if (sgn(im_) > 0) {
    s += " + " + imag_text(im_);
  } else {
    s += " - " + imag_text(mpq_class(-im_));
  }
  return s + ")";
}

std::size_t GaussianRational::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str()) * 1000003u ^ h(im_.get_str());
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) { return os << c.to_string(); }

}  // namespace holochern
