#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "holochern/rational_function.hpp"

namespace holochern {

class RFMatrix {
 public:
  RFMatrix() = default;
  RFMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RFMatrix(std::size_t rows, std::size_t cols, std::vector<RationalFunction> entries);
  static RFMatrix identity(std::size_t n);
  static RFMatrix scalar(const RationalFunction& f) { return RFMatrix(1, 1, {f}); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const RationalFunction& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  RationalFunction& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<RationalFunction>& entries() const { return entries_; }

  bool is_identity() const;
  RationalFunction determinant() const;
  // Adjugate divided by the determinant; throws std::domain_error when det is 0.
  RFMatrix inverse() const;
  RFMatrix substitute(const std::map<std::string, RationalFunction>& values) const;

  friend RFMatrix operator*(const RFMatrix& a, const RFMatrix& b);
  friend RFMatrix operator+(const RFMatrix& a, const RFMatrix& b);
  friend RFMatrix operator-(const RFMatrix& a, const RFMatrix& b);
  RFMatrix scaled(const RationalFunction& f) const;

  friend bool operator==(const RFMatrix& a, const RFMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const RFMatrix& a, const RFMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalFunction> entries_;
};

RFMatrix matrix_inverse(const RFMatrix& m);

}  // namespace holochern
