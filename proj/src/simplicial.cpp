#include "holochern/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace holochern {

std::string Generator::to_string() const {
  std::string s = "e(";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(indices[k]);
  }
  return s + ")";
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

namespace {

void subsets(int n, int size, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n - (size - static_cast<int>(cur.size())); ++v) {
    cur.push_back(v);
    subsets(n, size, v + 1, cur, out);
    cur.pop_back();
  }
}

// Increasing subsets of {0,...,n-1} of the given size, lexicographic.
std::vector<std::vector<int>> increasing_subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (size >= 0 && size <= n) subsets(n, size, 0, cur, out);
  return out;
}

}  // namespace

std::vector<Generator> nondegenerate_generators(int n, int l) {
  std::vector<Generator> out;
  if (l < 0 || l > n) return out;
  for (auto& s : increasing_subsets(n + 1, l + 1)) out.push_back({std::move(s), n});
  return out;
}

std::vector<Generator> all_generators(int n) {
  std::vector<Generator> out;
  for (int l = 0; l <= n; ++l) {
    auto g = nondegenerate_generators(n, l);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

Generator face(const Generator& g, int j) {
  Generator f = g;
  f.indices.erase(f.indices.begin() + j);
  return f;
}

Chain<Generator> boundary(const Generator& g) {
  Chain<Generator> c;
  if (g.dim() < 1) return c;
  for (int j = 0; j <= g.dim(); ++j) c.add(face(g, j), j % 2 == 0 ? 1 : -1);
  return c;
}

Chain<Generator> boundary(const Chain<Generator>& c) {
  Chain<Generator> out;
  for (const auto& [g, k] : c) out.add(boundary(g), k);
  return out;
}

std::vector<Shuffle> shuffles(int p, int q) {
  std::vector<Shuffle> out;
  if (p < 0 || q < 0) return out;
  for (auto& mu : increasing_subsets(p + q, p)) {
    Shuffle s;
    s.mu = mu;
    for (int v = 0; v < p + q; ++v) {
      if (!std::binary_search(mu.begin(), mu.end(), v)) s.nu.push_back(v);
    }
    int e = 0;
    for (int m = 0; m < p; ++m) e += mu[static_cast<std::size_t>(m)] - m;
    s.sign = e % 2 == 0 ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::pair<int, int>> ProductGenerator::vertices() const {
  const int r = dim();
  std::vector<std::pair<int, int>> v;
  v.reserve(static_cast<std::size_t>(r + 1));
  std::size_t a = 0, b = 0;
  for (int t = 0; t <= r; ++t) {
    v.emplace_back(left.indices[a], right.indices[b]);
    if (t == r) break;
    // Step t advances every factor that is not degenerate at t.
    if (!std::binary_search(nu.begin(), nu.end(), t)) ++a;
    if (!std::binary_search(mu.begin(), mu.end(), t)) ++b;
  }
  return v;
}

ProductGenerator ProductGenerator::from_vertices(const std::vector<std::pair<int, int>>& v, int n, int m) {
  ProductGenerator x;
  x.left.ambient = n;
  x.right.ambient = m;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t == 0 || v[t].first != v[t - 1].first) x.left.indices.push_back(v[t].first);
    if (t == 0 || v[t].second != v[t - 1].second) x.right.indices.push_back(v[t].second);
    if (t > 0) {
      bool same_left = v[t].first == v[t - 1].first;
      bool same_right = v[t].second == v[t - 1].second;
      if (same_left && same_right) throw std::invalid_argument("degenerate product simplex");
      if (same_left) x.nu.push_back(static_cast<int>(t) - 1);
      if (same_right) x.mu.push_back(static_cast<int>(t) - 1);
    }
  }
  return x;
}

std::string ProductGenerator::to_string() const {
  std::string s = "[";
  bool first = true;
  for (auto [a, b] : vertices()) {
    if (!first) s += " ";
    first = false;
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return s + "]";
}

Chain<ProductGenerator> ez_map(const Generator& left, const Generator& right) {
  Chain<ProductGenerator> out;
  for (const auto& s : shuffles(left.dim(), right.dim())) {
    ProductGenerator x;
    x.left = left;
    x.right = right;
    x.nu = s.nu;
    x.mu = s.mu;
    out.add(x, s.sign);
  }
  return out;
}

Chain<ProductGenerator> ez_map(const Chain<TensorGenerator>& c) {
  Chain<ProductGenerator> out;
  for (const auto& [t, k] : c) out.add(ez_map(t.first, t.second), k);
  return out;
}

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] <= v[k - 1]) return false;
  }
  return true;
}

}  // namespace

Chain<TensorGenerator> aw_map(const ProductGenerator& x) {
  Chain<TensorGenerator> out;
  auto v = x.vertices();
  const int r = static_cast<int>(v.size()) - 1;
  for (int k = 0; k <= r; ++k) {
    Generator front{{}, x.left.ambient};
    Generator back{{}, x.right.ambient};
    for (int t = 0; t <= k; ++t) front.indices.push_back(v[static_cast<std::size_t>(t)].first);
    for (int t = k; t <= r; ++t) back.indices.push_back(v[static_cast<std::size_t>(t)].second);
    // Degenerate faces vanish in normalized chains.
    if (strictly_increasing(front.indices) && strictly_increasing(back.indices)) out.add({front, back}, 1);
  }
  return out;
}

Chain<TensorGenerator> aw_map(const Chain<ProductGenerator>& c) {
  Chain<TensorGenerator> out;
  for (const auto& [x, k] : c) out.add(aw_map(x), k);
  return out;
}

Chain<ProductGenerator> boundary(const ProductGenerator& x) {
  Chain<ProductGenerator> out;
  auto v = x.vertices();
  if (v.size() < 2) return out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    auto f = v;
    f.erase(f.begin() + static_cast<long>(k));
    out.add(ProductGenerator::from_vertices(f, x.left.ambient, x.right.ambient), k % 2 == 0 ? 1 : -1);
  }
  return out;
}

Chain<ProductGenerator> boundary(const Chain<ProductGenerator>& c) {
  Chain<ProductGenerator> out;
  for (const auto& [x, k] : c) out.add(boundary(x), k);
  return out;
}

Chain<TensorGenerator> boundary(const Chain<TensorGenerator>& c) {
  Chain<TensorGenerator> out;
  for (const auto& [t, k] : c) {
    for (const auto& [f, s] : boundary(t.first)) out.add({f, t.second}, k * s);
    long sign = t.first.dim() % 2 == 0 ? 1 : -1;
    for (const auto& [f, s] : boundary(t.second)) out.add({t.first, f}, k * s * sign);
  }
  return out;
}

}  // namespace holochern
