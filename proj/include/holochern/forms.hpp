#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "holochern/matrix.hpp"
#include "holochern/rational_function.hpp"

namespace holochern {

struct Chart {
  std::string name;
  std::vector<std::string> coords;
};
using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::string name, std::vector<std::string> coords);
bool same_chart(const ChartPtr& a, const ChartPtr& b);

// Sorted coordinate indices of a basis form dz_I.
using IndexSet = std::vector<int>;

struct IndexSetLess {
  bool operator()(const IndexSet& a, const IndexSet& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

class HoloForm {
 public:
  using Terms = std::map<IndexSet, RationalFunction, IndexSetLess>;

  HoloForm() = default;
  explicit HoloForm(ChartPtr chart) : chart_(std::move(chart)) {}
  static HoloForm function(ChartPtr chart, const RationalFunction& f);
  static HoloForm differential(ChartPtr chart, int coord);

  const ChartPtr& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // Degree of a homogeneous nonzero form; 0 for the zero form.
  int degree() const;
  int max_degree() const;
  HoloForm homogeneous_part(int k) const;

  void add_term(const IndexSet& idx, const RationalFunction& f);

  HoloForm operator-() const;
  HoloForm& operator+=(const HoloForm& o);
  HoloForm& operator-=(const HoloForm& o);
  friend HoloForm operator+(HoloForm a, const HoloForm& b) { return a += b; }
  friend HoloForm operator-(HoloForm a, const HoloForm& b) { return a -= b; }
  HoloForm scaled(const RationalFunction& f) const;

  friend bool operator==(const HoloForm& a, const HoloForm& b);
  friend bool operator!=(const HoloForm& a, const HoloForm& b) { return !(a == b); }

  // "[f] dz^dw + [g] dw"; a degree-0 term is "[f]"; the zero form is "0".
  std::string to_string() const;

 private:
  ChartPtr chart_;
  Terms terms_;
};

HoloForm wedge(const HoloForm& a, const HoloForm& b);
HoloForm partial_d(const HoloForm& w);
HoloForm parse_form(const std::string& text, const ChartPtr& chart);

// Rational map source -> target: components[k] gives the k-th target
// coordinate as a function of the source coordinates.
struct RationalMap {
  ChartPtr source;
  ChartPtr target;
  std::vector<RationalFunction> components;
};

RationalMap identity_map(const ChartPtr& chart);
// (phi o psi): psi.source -> phi.target.
RationalMap compose(const RationalMap& phi, const RationalMap& psi);
bool operator==(const RationalMap& a, const RationalMap& b);
RationalFunction pullback(const RationalFunction& f, const RationalMap& phi);
// Cached pullback of forms on phi.target to forms on phi.source.
class Pullback {
 public:
  explicit Pullback(RationalMap phi);
  const RationalMap& map() const { return phi_; }
  HoloForm operator()(const HoloForm& w) const;

 private:
  const HoloForm& basis(const IndexSet& idx) const;

  RationalMap phi_;
  std::map<std::string, RationalFunction> subst_;
  std::vector<HoloForm> d_components_;
  mutable std::map<IndexSet, HoloForm, IndexSetLess> basis_cache_;
};
HoloForm pullback(const HoloForm& w, const RationalMap& phi);

class MatrixForm {
 public:
  MatrixForm() = default;
  MatrixForm(ChartPtr chart, std::size_t rows, std::size_t cols);
  static MatrixForm from_matrix(ChartPtr chart, const RFMatrix& m);
  static MatrixForm identity(ChartPtr chart, std::size_t n);

  const ChartPtr& chart() const { return chart_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const HoloForm& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  HoloForm& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  // Every entry homogeneous of degree k (zero entries allowed).
  bool has_pure_degree(int k) const;
  // Degree-0 matrix of functions; throws if an entry has positive degree.
  RFMatrix functions() const;

  friend MatrixForm operator*(const MatrixForm& a, const MatrixForm& b);
  friend MatrixForm operator+(const MatrixForm& a, const MatrixForm& b);
  friend MatrixForm operator-(const MatrixForm& a, const MatrixForm& b);
  MatrixForm operator-() const;
  friend bool operator==(const MatrixForm& a, const MatrixForm& b);
  friend bool operator!=(const MatrixForm& a, const MatrixForm& b) { return !(a == b); }

  std::string to_string() const;

 private:
  ChartPtr chart_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<HoloForm> entries_;
};

MatrixForm partial_d(const MatrixForm& m);
MatrixForm pullback(const MatrixForm& m, const Pullback& phi);
HoloForm trace_form(const MatrixForm& m);

// A local connection d + A; A is an r x r matrix of 1-forms.
using ConnectionMatrix = MatrixForm;
ConnectionMatrix zero_connection(const ChartPtr& chart, std::size_t rank);
void validate_connection(const ConnectionMatrix& a);

// Induced connection on Hom: del f + A_dst f - f A_src.
MatrixForm apply_connection(const MatrixForm& f, const ConnectionMatrix& a_src, const ConnectionMatrix& a_dst);

}  // namespace holochern
