#pragma once

#include <map>
#include <utility>
#include <vector>

#include "holochern/cech.hpp"
#include "holochern/fiber_integration.hpp"
#include "holochern/forms.hpp"
#include "holochern/report.hpp"
#include "holochern/simplicial.hpp"

namespace holochern {

// A chain of composable bundle maps E_0 -> E_1 -> ... -> E_l on one chart;
// morphisms[m] maps object m to object m + 1.
struct NerveSimplex {
  ChartPtr chart;
  std::vector<ConnectionMatrix> connections;
  std::vector<RFMatrix> morphisms;

  int dim() const { return static_cast<int>(morphisms.size()); }
};

// l = 0: the rank as a constant. l >= 1:
// tr((f_l ... f_1)^{-1} nabla f_l ... nabla f_1) u^l.
UPolyForm ch_nerve_simplex(const NerveSimplex& s);
// Face d_j: drops object j, composing across it when 0 < j < l.
NerveSimplex nerve_face(const NerveSimplex& s, int j);
// sum_j (-1)^j ch(d_j s) = 0.
CheckReport verify_face_sum(const NerveSimplex& s);

// Transition data of one bundle. g(i, j): E_j -> E_i over U_ij, expressed in
// the chart of min(i, j); a missing direction is the inverse of the other.
class BundleVertexData {
 public:
  BundleVertexData() = default;
  BundleVertexData(Cover cover, int rank);

  const Cover& cover() const { return cover_; }
  int rank() const { return rank_; }

  void set_transition(int i, int j, RFMatrix g);
  void set_connection(int i, ConnectionMatrix a);
  bool has_transition(int i, int j) const;

  RFMatrix g(int i, int j) const;
  RFMatrix g_in(int i, int j, int chart) const;
  const ConnectionMatrix& connection(int i) const { return connections_.at(i); }
  ConnectionMatrix connection_in(int i, int chart) const;

 private:
  Cover cover_;
  int rank_ = 0;
  std::vector<ConnectionMatrix> connections_;
  std::map<std::pair<int, int>, RFMatrix> stored_;
  mutable std::map<std::pair<int, int>, RFMatrix> derived_;
};

// Bundles E^(0..n) on one cover with intertwiners f^p_i: E^(p-1)_i -> E^(p)_i
// expressed in chart i.
class BundlePathData {
 public:
  BundlePathData() = default;
  explicit BundlePathData(std::vector<BundleVertexData> levels);

  int n() const { return static_cast<int>(levels_.size()) - 1; }
  const Cover& cover() const { return levels_.front().cover(); }
  const BundleVertexData& level(int p) const { return levels_.at(p); }
  BundleVertexData& level(int p) { return levels_.at(p); }

  void set_intertwiner(int p, int i, RFMatrix f);
  const RFMatrix& intertwiner(int p, int i) const;
  // f^(b,a)_i = f^b_i ... f^(a+1)_i, the identity when a = b.
  RFMatrix f(int b, int a, int i) const;

 private:
  std::vector<BundleVertexData> levels_;
  std::map<std::pair<int, int>, RFMatrix> f_;
};

CheckReport validate_bundle_data(const BundleVertexData& d);
CheckReport validate_bundle_data(const BundlePathData& d);

// Nerve simplex along a monotone lattice path of vertices (base index i,
// bundle level j): a base step uses g^(j), a level step uses f^(j', j).
// Everything is expressed in `chart`.
NerveSimplex path_simplex(const BundlePathData& d, const std::vector<std::pair<int, int>>& vertices, int chart);

UPolyCochain tot_ch_vertex(const BundleVertexData& d, int max_level);
UPolyCochain tot_ch_simplex(const BundlePathData& d, const Generator& e, int max_level);
ChainMapTable tot_ch_table(const BundlePathData& d, int max_level);

}  // namespace holochern
