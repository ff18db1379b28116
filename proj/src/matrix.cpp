#include "holochern/matrix.hpp"

#include <stdexcept>

namespace holochern {

RFMatrix::RFMatrix(std::size_t rows, std::size_t cols, std::vector<RationalFunction> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("RFMatrix: entry count mismatch");
}

RFMatrix RFMatrix::identity(std::size_t n) {
  RFMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = RationalFunction(1);
  return m;
}

bool RFMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& e = (*this)(r, c);
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Laplace expansion along the first row of the minor given by row/col index sets.
RationalFunction det_minor(const RFMatrix& m, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return RationalFunction(1);
  if (n == 1) return m(rows[0], cols[0]);
  if (n == 2) {
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  }
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  RationalFunction det;
  for (std::size_t j = 0; j < n; ++j) {
    const RationalFunction& a = m(rows[0], cols[j]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != j) sub_cols.push_back(cols[c]);
    }
    RationalFunction t = a * det_minor(m, sub_rows, sub_cols);
    if (j % 2 == 0) {
      det += t;
    } else {
      det -= t;
    }
  }
  return det;
}

std::vector<std::size_t> iota_except(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != skip) v.push_back(k);
  }
  return v;
}

}  // namespace

RationalFunction RFMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return det_minor(*this, iota_except(rows_, rows_), iota_except(cols_, cols_));
}

RFMatrix RFMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  RationalFunction det = determinant();
  if (det.is_zero()) throw std::domain_error("singular matrix: determinant is identically zero");
  RationalFunction inv = det.inverse();
  const std::size_t n = rows_;
  RFMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = inv;
    return out;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // adj(M)_{rc} = (-1)^{r+c} det(M without row c and column r)
      RationalFunction cof = det_minor(*this, iota_except(n, c), iota_except(n, r));
      if ((r + c) % 2 == 1) cof = -cof;
      out(r, c) = cof * inv;
    }
  }
  return out;
}

RFMatrix RFMatrix::substitute(const std::map<std::string, RationalFunction>& values) const {
  RFMatrix out = *this;
  for (auto& e : out.entries_) e = e.substitute(values);
  return out;
}

RFMatrix operator*(const RFMatrix& a, const RFMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RFMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      RationalFunction s;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(r, k);
        const auto& y = b(k, c);
        if (x.is_zero() || y.is_zero()) continue;
        s += x * y;
      }
      out(r, c) = std::move(s);
    }
  }
  return out;
}

RFMatrix operator+(const RFMatrix& a, const RFMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  RFMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

RFMatrix operator-(const RFMatrix& a, const RFMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
  RFMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

RFMatrix RFMatrix::scaled(const RationalFunction& f) const {
  RFMatrix out = *this;
  for (auto& e : out.entries_) e *= f;
  return out;
}

std::string RFMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ", ";
    s += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += (*this)(r, c).to_string();
    }
    s += "]";
  }
  return s + "]";
}

RFMatrix matrix_inverse(const RFMatrix& m) { return m.inverse(); }

}  // namespace holochern
