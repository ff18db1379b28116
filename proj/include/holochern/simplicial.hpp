#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace holochern {

// Nondegenerate simplex e_{i0...il} of Delta^n; indices strictly increase.
struct Generator {
  std::vector<int> indices;
  int ambient = 0;

  int dim() const { return static_cast<int>(indices.size()) - 1; }
  // Cohomological degree of the generator in N(Z Delta^n).
  int degree() const { return -dim(); }
  std::string to_string() const;

  friend bool operator<(const Generator& a, const Generator& b) {
    return a.ambient != b.ambient ? a.ambient < b.ambient : a.indices < b.indices;
  }
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.ambient == b.ambient && a.indices == b.indices;
  }
};

// Integer combination with no zero terms, ordered by key.
template <class Key>
class Chain {
 public:
  void add(const Key& k, long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const Chain& o, long scale = 1) {
    for (const auto& [k, c] : o.terms_) add(k, c * scale);
  }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Key, long>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }

 private:
  std::map<Key, long> terms_;
};

std::vector<Generator> nondegenerate_generators(int n, int l);
std::vector<Generator> all_generators(int n);
Generator face(const Generator& g, int j);
Chain<Generator> boundary(const Generator& g);
Chain<Generator> boundary(const Chain<Generator>& c);

// A (p,q)-shuffle: mu has p entries, nu has q entries, together {0,...,p+q-1}.
struct Shuffle {
  std::vector<int> mu;
  std::vector<int> nu;
  int sign = 1;
};

// All C(p+q, p) shuffles, mu in lexicographic order.
std::vector<Shuffle> shuffles(int p, int q);

// Nondegenerate r-simplex of Delta^n x Delta^m written as
// (s_nu(e_J), s_mu(e_I)): nu lists the degeneracies of the left factor,
// mu those of the right factor, nu and mu are disjoint.
struct ProductGenerator {
  Generator left;
  Generator right;
  std::vector<int> nu;
  std::vector<int> mu;

  int dim() const { return static_cast<int>(left.indices.size() + nu.size()) - 1; }
  // Vertex sequence of the r-simplex in the product poset.
  std::vector<std::pair<int, int>> vertices() const;
  static ProductGenerator from_vertices(const std::vector<std::pair<int, int>>& v, int n, int m);
  std::string to_string() const;

  friend bool operator<(const ProductGenerator& a, const ProductGenerator& b) {
    return a.vertices() < b.vertices();
  }
  friend bool operator==(const ProductGenerator& a, const ProductGenerator& b) {
    return a.vertices() == b.vertices();
  }
};

using TensorGenerator = std::pair<Generator, Generator>;

Chain<ProductGenerator> ez_map(const Generator& left, const Generator& right);
Chain<ProductGenerator> ez_map(const Chain<TensorGenerator>& c);
Chain<TensorGenerator> aw_map(const ProductGenerator& x);
Chain<TensorGenerator> aw_map(const Chain<ProductGenerator>& c);

Chain<ProductGenerator> boundary(const ProductGenerator& x);
Chain<ProductGenerator> boundary(const Chain<ProductGenerator>& c);
// d(x (x) y) = dx (x) y + (-1)^{dim x} x (x) dy
Chain<TensorGenerator> boundary(const Chain<TensorGenerator>& c);

long binomial(int n, int k);

}  // namespace holochern
