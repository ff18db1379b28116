#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "holochern/cech.hpp"
#include "holochern/chern.hpp"
#include "holochern/forms.hpp"
#include "holochern/report.hpp"

namespace holochern {

// Finite group given by its multiplication table: mul[a][b] = a * b.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  explicit FiniteGroup(std::vector<std::vector<int>> mul);
  static FiniteGroup cyclic(int n);

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_.at(a).at(b); }
  int identity() const { return identity_; }
  int inverse(int a) const;
  // Associativity, a two-sided identity and inverses.
  CheckReport validate() const;

 private:
  std::vector<std::vector<int>> mul_;
  int identity_ = -1;
};

// Coordinate ring of G^l for G = GL(n): chart with coordinates g<m>_<r><c>,
// m = 1..l (l = 0 gives a chart without coordinates).
ChartPtr universal_chart(int l, int n);
// Symbolic n x n matrix of the m-th factor on `chart`.
RFMatrix universal_matrix(const ChartPtr& chart, int m, int n);
// l = 0: the constant n. l >= 1: tr(g_1 ... g_l del(g_l^{-1}) ... del(g_1^{-1})).
HoloForm universal_chern(int l, int n);

// Transition data of a map from the nerve of U^[n] to BG: levels p = 0..n of
// transition families and intertwiners, no connections.
class BGMapData {
 public:
  BGMapData() = default;
  BGMapData(Cover cover, int rank, int n);

  const Cover& cover() const { return cover_; }
  int rank() const { return rank_; }
  int n() const { return static_cast<int>(g_.size()) - 1; }

  void set_transition(int p, int i, int j, RFMatrix g);
  void set_intertwiner(int p, int i, RFMatrix f);
  const std::map<std::pair<int, int>, RFMatrix>& transitions(int p) const { return g_.at(p); }
  const std::map<std::pair<int, int>, RFMatrix>& intertwiners() const { return f_; }

 private:
  Cover cover_;
  int rank_ = 0;
  std::vector<std::map<std::pair<int, int>, RFMatrix>> g_;
  std::map<std::pair<int, int>, RFMatrix> f_;
};

// The path data with trivial connections and the same g's and f's.
BundlePathData beta(const BGMapData& h);
CheckReport validate_bg_data(const BGMapData& h);

// Cocycle on a cover V: h(x, y, chart) maps the frame over y to the frame over
// x (x, y cover indices), expressed in `chart`.
using CocycleProvider = std::function<RFMatrix(int x, int y, int chart)>;
// h_{(i,b),(j,a)} on U^[n]: f^(b,a)_i g^(a)_ij when b >= a, else the inverse
// of the reverse.
CocycleProvider lifted_cocycle(const BundlePathData& d, const Cover& lifted);

// (gamma h)_{x0..xp} = tr(h_{xp,x0}^{-1} del h_{xp,xp-1} ... del h_{x1,x0})
// on declared tuples of levels <= max_level, in the anchor chart.
CechCochain gamma(const Cover& v, const CocycleProvider& h, int max_level);
// gamma on U^[n] for the data of h.
CechCochain gamma(const BGMapData& h, int max_level);

// iota(c)(e_J) on a base tuple T with q + 1 entries:
// (-1)^{l(l-1)/2} sum over steps of (-1)^{s_1+...+s_l} c on the lift of T with
// level m placed on level j_m; each term of Cech degree k and form degree w
// carries u^{(k+w)/2}. `lifted` is U^[n].
ChainMapTable iota(const Cover& lifted, const CechCochain& c, int max_level);

// iota(gamma(h)) against the Tot(Ch) table of beta(h), generator by generator
// and tuple by tuple.
CheckReport verify_square(const BGMapData& h, int max_level);

// Finite group acting on the right on M, chart-preserving: rho(g, i) maps
// chart i to itself, phi(g, i): E_x -> E_{x.g} in the coordinates of chart i.
class EquivariantBundleData {
 public:
  EquivariantBundleData() = default;
  EquivariantBundleData(Cover cover, FiniteGroup group, int rank);

  const Cover& cover() const { return cover_; }
  const FiniteGroup& group() const { return group_; }
  int rank() const { return rank_; }

  void set_action(int g, int chart, RationalMap rho);
  void set_lift(int g, int chart, RFMatrix phi);
  void set_connection(int chart, ConnectionMatrix a);

  const RationalMap& action(int g, int chart) const;
  const RFMatrix& lift(int g, int chart) const;
  const ConnectionMatrix& connection(int chart) const { return connections_.at(chart); }

 private:
  Cover cover_;
  FiniteGroup group_;
  int rank_ = 0;
  std::map<std::pair<int, int>, RationalMap> rho_;
  std::map<std::pair<int, int>, RFMatrix> phi_;
  std::vector<ConnectionMatrix> connections_;
};

RFMatrix pullback(const RFMatrix& m, const RationalMap& phi);

// rho_e = id, rho_{gh} = rho_h o rho_g, phi_e = id,
// phi_{gh} = (rho_g^* phi_h) phi_g, phi invertible.
CheckReport validate_equivariant_data(const EquivariantBundleData& d);
// del phi_g + (rho_g^* A) phi_g - phi_g A.
MatrixForm nabla_phi(const EquivariantBundleData& d, int g, int chart);
// Nerve simplex of the word (g_1, ..., g_l) over chart i of M.
NerveSimplex word_simplex(const EquivariantBundleData& d, const std::vector<int>& word, int chart);

struct EquivariantReport {
  CheckReport laws;
  CheckReport invariance;  // nabla(phi) = 0; witnesses give the nonzero entries
  CheckReport vanishing;   // positive u-degree word components vanish
  bool invariant = false;
  // Word components with l >= 1 that are nonzero.
  std::vector<std::pair<std::vector<int>, UPolyForm>> nonzero_words;
};

// Words of length 1..max_word (<= 0 means |G|) on every chart.
EquivariantReport equivariant_check(const EquivariantBundleData& d, int max_word = 0);

}  // namespace holochern
