#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holochern/forms.hpp"
#include "holochern/report.hpp"
#include "holochern/simplicial.hpp"

namespace holochern {

// Ordered overlap tuple (i0, ..., iq) of cover indices.
using Tuple = std::vector<int>;

Tuple face(const Tuple& t, std::size_t j);

struct MissingChangeMap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite cover with declared overlaps, or its lift U^[k]. Index x of U^[k]
// stands for base chart x % N on level x / N, so the lift with k = 0 is the
// cover itself. A tuple is declared iff its entries are distinct and its set
// of base charts is a declared overlap. Components on a tuple live in the
// chart of its minimal base index.
class Cover {
 public:
  Cover() = default;
  // Overlaps are closed downward; every singleton is declared.
  Cover(std::vector<ChartPtr> charts, const std::vector<std::vector<int>>& overlaps);
  // Fully overlapping cover.
  static Cover complete(std::vector<ChartPtr> charts);

  // phi.source and phi.target are charts `from` and `to` of this cover; the
  // components give the coordinates of `to` in terms of those of `from`.
  void add_change_map(int from, int to, std::vector<RationalFunction> components);

  Cover lifted(int k) const;
  int base_size() const { return static_cast<int>(data_->charts.size()); }
  int levels() const { return levels_; }
  int size() const { return base_size() * levels_; }
  int base(int x) const { return x % base_size(); }
  int level(int x) const { return x / base_size(); }
  int index(int base_index, int level_index) const { return level_index * base_size() + base_index; }
  const ChartPtr& chart(int x) const { return data_->charts[base(x)]; }
  const std::vector<ChartPtr>& charts() const { return data_->charts; }

  bool overlap_declared(std::vector<int> bases) const;
  bool declared(const Tuple& t) const;
  int anchor(const Tuple& t) const;
  const ChartPtr& anchor_chart(const Tuple& t) const { return data_->charts[anchor(t)]; }
  // Declared tuples with q + 1 entries in lexicographic order.
  std::vector<Tuple> tuples(int q) const;
  std::vector<Tuple> tuples_up_to(int max_level) const;

  bool has_change_map(int a, int b) const;
  // Map from chart a to chart b (a != b base indices), composing stored maps
  // through intermediate charts when no direct map is stored.
  const RationalMap& change_map(int a, int b) const;
  // Pullback of forms on chart b to chart a.
  const Pullback& pullback(int a, int b) const;

  HoloForm restrict(const HoloForm& w, const Tuple& from, const Tuple& to) const;
  MatrixForm restrict(const MatrixForm& m, int from_chart, int to_chart) const;
  HoloForm to_chart(const HoloForm& w, int from_chart, int to_chart) const;
  RFMatrix to_chart(const RFMatrix& m, int from_chart, int to_chart) const;

  // Every declared pair has a change map from its smaller index, and stored
  // maps compose consistently on declared triples.
  CheckReport validate() const;

  std::string tuple_to_string(const Tuple& t) const;
  Tuple parse_tuple(const std::string& text) const;

 private:
  struct Data {
    std::vector<ChartPtr> charts;
    std::set<std::vector<int>> overlaps;
    std::map<std::pair<int, int>, RationalMap> stored;
    mutable std::map<std::pair<int, int>, RationalMap> composed;
    mutable std::map<std::pair<int, int>, std::shared_ptr<Pullback>> pullbacks;
  };
  const RationalMap* find_map(int a, int b) const;

  std::shared_ptr<Data> data_;
  int levels_ = 1;
};

// Finite sum of u^m (x) w_m in the quotient killing positive total degree:
// a term with form degree k > 2m is discarded on insertion.
class UPolyForm {
 public:
  using Terms = std::map<int, HoloForm>;

  UPolyForm() = default;
  static UPolyForm monomial(int upow, const HoloForm& w);

  void add(int upow, const HoloForm& w);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HoloForm coefficient(int upow) const;

  UPolyForm operator-() const;
  UPolyForm& operator+=(const UPolyForm& o);
  UPolyForm& operator-=(const UPolyForm& o);
  friend UPolyForm operator+(UPolyForm a, const UPolyForm& b) { return a += b; }
  friend UPolyForm operator-(UPolyForm a, const UPolyForm& b) { return a -= b; }
  UPolyForm scaled(const RationalFunction& f) const;
  UPolyForm pulled_back(const Pullback& pb) const;
  friend bool operator==(const UPolyForm& a, const UPolyForm& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const UPolyForm& a, const UPolyForm& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Terms terms_;
};

// Free presheaf on the nerve: a section over T is a combination of
// generators, each tagged with the tuple it was first placed on.
struct FormalSymbol {
  int gen = 0;
  Tuple origin;
  friend bool operator<(const FormalSymbol& a, const FormalSymbol& b) {
    return a.gen != b.gen ? a.gen < b.gen : a.origin < b.origin;
  }
  friend bool operator==(const FormalSymbol& a, const FormalSymbol& b) {
    return a.gen == b.gen && a.origin == b.origin;
  }
};

class FormalSection {
 public:
  using Terms = std::map<FormalSymbol, GaussianRational>;

  void add(const FormalSymbol& s, const GaussianRational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FormalSection operator-() const;
  FormalSection& operator+=(const FormalSection& o);
  FormalSection& operator-=(const FormalSection& o);
  friend FormalSection operator+(FormalSection a, const FormalSection& b) { return a += b; }
  friend FormalSection operator-(FormalSection a, const FormalSection& b) { return a -= b; }
  FormalSection scaled(const GaussianRational& c) const;
  friend bool operator==(const FormalSection& a, const FormalSection& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FormalSection& a, const FormalSection& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Terms terms_;
};

// Generators with form degrees and an internal differential d_A; d_A acts on
// generator labels and keeps origins, so it commutes with restriction.
class FormalComplex {
 public:
  int add_generator(int degree);
  void set_differential(int gen, std::vector<std::pair<int, GaussianRational>> image);
  int degree(int gen) const { return degrees_.at(gen); }
  int size() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& generators_of_degree(int k) const;
  FormalSection d(const FormalSection& s) const;

  // per_degree generators in each degree 0..max_degree; with a differential,
  // d_A sends each generator of degree k to a random combination of a
  // designated set of cycles of degree k + 1, so d_A^2 = 0.
  static FormalComplex random(std::mt19937& rng, int max_degree, int per_degree, bool with_differential);

 private:
  std::vector<int> degrees_;
  std::map<int, std::vector<int>> by_degree_;
  std::map<int, std::vector<std::pair<int, GaussianRational>>> d_;
};

// Formal cochains are lazy: the component on every tuple is computed on demand.
using FormalCochain = std::function<FormalSection(const Tuple&)>;

// Random formal cochain of total degree n: on a tuple with q + 1 entries it
// is a combination of generators of form degree n - q, with coefficients
// determined by (seed, tuple).
FormalCochain random_formal_cochain(const FormalComplex& cx, int total_degree, std::uint64_t seed);

FormalCochain formal_delta(FormalCochain c);
FormalCochain formal_d_internal(const FormalComplex& cx, FormalCochain c);
// D(c) = delta(c) - (-1)^{|c|} d_A(c), |c| the total degree.
FormalCochain formal_total_differential(const FormalComplex& cx, FormalCochain c);
// d(c) = d_A(c) - (-1)^{|c|} delta(c).
FormalCochain formal_tot_differential(const FormalComplex& cx, FormalCochain c);
// Multiplies the bidegree pieces of total degree k by (-1)^{k(k+1)/2}.
FormalCochain formal_tot_to_cech(const FormalComplex& cx, FormalCochain c);

int tot_sign(int total_degree);

// Stored cochain with zero components omitted.
template <class V>
class Cochain {
 public:
  using Components = std::map<Tuple, V>;

  void set(const Tuple& t, V v) {
    if (v.is_zero()) {
      components_.erase(t);
    } else {
      components_[t] = std::move(v);
    }
  }
  void add(const Tuple& t, const V& v) {
    auto it = components_.find(t);
    if (it == components_.end()) {
      set(t, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) components_.erase(it);
    }
  }
  V at(const Tuple& t) const {
    auto it = components_.find(t);
    return it == components_.end() ? V() : it->second;
  }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  friend bool operator==(const Cochain& a, const Cochain& b) { return a.components_ == b.components_; }
  friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

 private:
  Components components_;
};

using CechCochain = Cochain<HoloForm>;
using UPolyCochain = Cochain<UPolyForm>;

UPolyForm restrict(const Cover& cover, const UPolyForm& v, const Tuple& from, const Tuple& to);

// (delta c)_T for one declared tuple T with at least two entries.
HoloForm delta_at(const Cover& cover, const CechCochain& c, const Tuple& t);
UPolyForm delta_at(const Cover& cover, const UPolyCochain& c, const Tuple& t);
// delta c on all declared tuples of levels 1..max_level.
CechCochain cech_delta(const Cover& cover, const CechCochain& c, int max_level);
UPolyCochain cech_delta(const Cover& cover, const UPolyCochain& c, int max_level);
// With zero internal differential the total differential is delta.
inline UPolyCochain total_differential(const Cover& cover, const UPolyCochain& c, int max_level) {
  return cech_delta(cover, c, max_level);
}

UPolyCochain u_truncate(const CechCochain& c, int upow);

// Chain map N(Z Delta^n) -> Cech complex, one cochain per generator.
using ChainMapTable = std::map<Generator, UPolyCochain>;

// Checks image(boundary e) = D(image e) on tuples of levels 0..max_level.
CheckReport validate_chain_map(const Cover& cover, const ChainMapTable& table, int n, int max_level);

// Every component of D(c) vanishes on levels 1..max_level + 1.
CheckReport check_closed(const Cover& cover, const UPolyCochain& c, int max_level);

// One line per (tuple, u-power): "(i0,...,il) | u^m | <form>".
std::string serialize(const Cover& cover, const UPolyCochain& c);
UPolyCochain parse_upoly_cochain(const Cover& cover, const std::string& text);

}  // namespace holochern
