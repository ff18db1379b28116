#include "holochern/bg.hpp"

#include <memory>
#include <stdexcept>
#include <string>

#include "holochern/fiber_integration.hpp"

namespace holochern {

namespace {

std::string word_string(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

std::string elem_chart(int g, int i) { return "g=" + std::to_string(g) + " chart " + std::to_string(i); }

}  // namespace

// ---------------------------------------------------------------- groups

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul) : mul_(std::move(mul)) {
  const int n = order();
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("multiplication table must be square");
    for (int v : row) {
      if (v < 0 || v >= n) throw std::invalid_argument("multiplication table entry out of range");
    }
  }
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
    if (ok) identity_ = e;
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(mul));
}

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < order(); ++b) {
    if (mul(a, b) == identity_) return b;
  }
  throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
}

CheckReport FiniteGroup::validate() const {
  CheckReport r;
  r.name = "group";
  ++r.checked;
  if (order() == 0) r.fail("empty group");
  if (identity_ < 0) {
    r.fail("no two-sided identity");
    return r;
  }
  for (int a = 0; a < order(); ++a) {
    ++r.checked;
    bool has = false;
    for (int b = 0; b < order(); ++b) has = has || (mul(a, b) == identity_ && mul(b, a) == identity_);
    if (!has) r.fail("element " + std::to_string(a) + " has no inverse");
    for (int b = 0; b < order(); ++b) {
      for (int c = 0; c < order(); ++c) {
        ++r.checked;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) r.fail("not associative at " + word_string({a, b, c}));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- universal form

ChartPtr universal_chart(int l, int n) {
  std::vector<std::string> coords;
  for (int m = 1; m <= l; ++m) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) coords.push_back("g" + std::to_string(m) + "_" + std::to_string(r) + std::to_string(c));
    }
  }
  return make_chart("GL" + std::to_string(n) + "^" + std::to_string(l), coords);
}

RFMatrix universal_matrix(const ChartPtr& chart, int m, int n) {
  RFMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const int offset = (m - 1) * n * n;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g(r, c) = RationalFunction::variable(chart->coords.at(offset + r * n + c));
  }
  return g;
}

HoloForm universal_chern(int l, int n) {
  if (l < 0 || n < 1) throw std::invalid_argument("universal_chern needs l >= 0 and n >= 1");
  ChartPtr chart = universal_chart(l, n);
  if (l == 0) return HoloForm::function(chart, static_cast<long>(n));
  RFMatrix prod = RFMatrix::identity(n);
  for (int m = 1; m <= l; ++m) prod = prod * universal_matrix(chart, m, n);
  MatrixForm body = MatrixForm::from_matrix(chart, prod);
  for (int m = l; m >= 1; --m) body = body * partial_d(MatrixForm::from_matrix(chart, universal_matrix(chart, m, n).inverse()));
  return trace_form(body);
}

// ---------------------------------------------------------------- BG data

BGMapData::BGMapData(Cover cover, int rank, int n) : cover_(std::move(cover)), rank_(rank), g_(n + 1) {
  if (n < 0) throw std::invalid_argument("BG data needs n >= 0");
}

void BGMapData::set_transition(int p, int i, int j, RFMatrix g) { g_.at(p)[{i, j}] = std::move(g); }

void BGMapData::set_intertwiner(int p, int i, RFMatrix f) {
  if (p < 1 || p > n()) throw std::invalid_argument("intertwiner level out of range");
  f_[{p, i}] = std::move(f);
}

BundlePathData beta(const BGMapData& h) {
  std::vector<BundleVertexData> levels;
  for (int p = 0; p <= h.n(); ++p) {
    BundleVertexData v(h.cover(), h.rank());
    for (const auto& [ij, g] : h.transitions(p)) v.set_transition(ij.first, ij.second, g);
    levels.push_back(std::move(v));
  }
  BundlePathData d(std::move(levels));
  for (const auto& [pi, f] : h.intertwiners()) d.set_intertwiner(pi.first, pi.second, f);
  return d;
}

CheckReport validate_bg_data(const BGMapData& h) {
  CheckReport r;
  r.name = "BG data";
  for (int p = 1; p <= h.n(); ++p) {
    for (int i = 0; i < h.cover().base_size(); ++i) {
      ++r.checked;
      if (!h.intertwiners().count({p, i})) r.fail("missing intertwiner f^" + std::to_string(p) + "_" + std::to_string(i));
    }
  }
  if (!r.ok) return r;
  r.merge(validate_bundle_data(beta(h)));
  return r;
}

CocycleProvider lifted_cocycle(const BundlePathData& d, const Cover& lifted) {
  auto data = std::make_shared<BundlePathData>(d);
  return [data, lifted](int x, int y, int chart) -> RFMatrix {
    const Cover& c = data->cover();
    int i = lifted.base(x), b = lifted.level(x);
    int j = lifted.base(y), a = lifted.level(y);
    if (b >= a) return c.to_chart(data->f(b, a, i), i, chart) * data->level(a).g_in(i, j, chart);
    return (c.to_chart(data->f(a, b, j), j, chart) * data->level(b).g_in(j, i, chart)).inverse();
  };
}

CechCochain gamma(const Cover& v, const CocycleProvider& h, int max_level) {
  CechCochain out;
  for (const auto& t : v.tuples_up_to(max_level)) {
    const int a = v.anchor(t);
    const ChartPtr& chart = v.chart(a);
    const int p = static_cast<int>(t.size()) - 1;
    // A p-form on a chart of smaller dimension vanishes.
    if (p > static_cast<int>(chart->coords.size())) continue;
    RFMatrix total = h(t[p], t[0], a);
    MatrixForm body = MatrixForm::identity(chart, total.rows());
    for (int m = 1; m <= p; ++m) body = partial_d(MatrixForm::from_matrix(chart, h(t[m], t[m - 1], a))) * body;
    out.set(t, trace_form(MatrixForm::from_matrix(chart, total.inverse()) * body));
  }
  return out;
}

CechCochain gamma(const BGMapData& h, int max_level) {
  Cover lifted = h.cover().lifted(h.n());
  return gamma(lifted, lifted_cocycle(beta(h), lifted), max_level);
}

ChainMapTable iota(const Cover& lifted, const CechCochain& c, int max_level) {
  const int n = lifted.levels() - 1;
  Cover base = lifted.lifted(0);
  ChainMapTable table;
  for (const auto& e : all_generators(n)) {
    const int l = e.dim();
    const bool flip = (static_cast<long>(l) * (l - 1) / 2) % 2 != 0;
    UPolyCochain img;
    for (const auto& t : base.tuples_up_to(max_level)) {
      const int k = static_cast<int>(t.size()) - 1 + l;
      UPolyForm sum;
      for (const auto& s : step_positions(l, static_cast<int>(t.size()) - 1)) {
        HoloForm w = c.at(lifted_indices(lifted, t, s, e.indices));
        const bool neg = (step_sign(s) < 0) != flip;
        for (int deg = 0; deg <= w.max_degree(); ++deg) {
          HoloForm part = w.homogeneous_part(deg);
          if (part.is_zero()) continue;
          if ((k + deg) % 2 != 0) throw std::invalid_argument("iota needs a cochain of even total degree");
          sum.add((k + deg) / 2, neg ? -part : part);
        }
      }
      img.set(t, sum);
    }
    table[e] = img;
  }
  return table;
}

CheckReport verify_square(const BGMapData& h, int max_level) {
  CheckReport r;
  r.name = "square";
  BundlePathData d = beta(h);
  Cover lifted = h.cover().lifted(h.n());
  CechCochain g = gamma(lifted, lifted_cocycle(d, lifted), max_level + h.n());
  ChainMapTable left = iota(lifted, g, max_level);
  ChainMapTable right = tot_ch_table(d, max_level);
  Cover base = lifted.lifted(0);
  for (const auto& e : all_generators(h.n())) {
    for (const auto& t : base.tuples_up_to(max_level)) {
      ++r.checked;
      UPolyForm lv = left[e].at(t);
      UPolyForm rv = right[e].at(t);
      if (lv != rv) {
        r.fail(e.to_string() + " at " + base.tuple_to_string(t) + ": iota(gamma) = " + lv.to_string() +
               ", Tot(Ch)(beta) = " + rv.to_string());
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- equivariant data

EquivariantBundleData::EquivariantBundleData(Cover cover, FiniteGroup group, int rank)
    : cover_(std::move(cover)), group_(std::move(group)), rank_(rank) {
  for (int i = 0; i < cover_.base_size(); ++i) {
    connections_.push_back(zero_connection(cover_.chart(i), rank));
    if (group_.identity() >= 0) {
      rho_[{group_.identity(), i}] = identity_map(cover_.chart(i));
      phi_[{group_.identity(), i}] = RFMatrix::identity(rank);
    }
  }
}

void EquivariantBundleData::set_action(int g, int chart, RationalMap rho) {
  if (!same_chart(rho.source, cover_.chart(chart)) || !same_chart(rho.target, cover_.chart(chart))) {
    throw std::invalid_argument("action of " + elem_chart(g, chart) + " must map the chart to itself");
  }
  rho_[{g, chart}] = std::move(rho);
}

void EquivariantBundleData::set_lift(int g, int chart, RFMatrix phi) {
  if (static_cast<int>(phi.rows()) != rank_ || static_cast<int>(phi.cols()) != rank_) {
    throw std::invalid_argument("lift of " + elem_chart(g, chart) + " has the wrong size");
  }
  phi_[{g, chart}] = std::move(phi);
}

void EquivariantBundleData::set_connection(int chart, ConnectionMatrix a) {
  validate_connection(a);
  if (static_cast<int>(a.rows()) != rank_ || !same_chart(a.chart(), cover_.chart(chart))) {
    throw std::invalid_argument("connection on chart " + std::to_string(chart) + " has the wrong shape or chart");
  }
  connections_.at(chart) = std::move(a);
}

const RationalMap& EquivariantBundleData::action(int g, int chart) const {
  auto it = rho_.find({g, chart});
  if (it == rho_.end()) throw std::invalid_argument("missing action of " + elem_chart(g, chart));
  return it->second;
}

const RFMatrix& EquivariantBundleData::lift(int g, int chart) const {
  auto it = phi_.find({g, chart});
  if (it == phi_.end()) throw std::invalid_argument("missing lift of " + elem_chart(g, chart));
  return it->second;
}

RFMatrix pullback(const RFMatrix& m, const RationalMap& phi) {
  RFMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = pullback(m(r, c), phi);
  }
  return out;
}

CheckReport validate_equivariant_data(const EquivariantBundleData& d) {
  CheckReport r = d.group().validate();
  r.name = "equivariant data";
  if (!r.ok) return r;
  const FiniteGroup& G = d.group();
  const int e = G.identity();
  for (int i = 0; i < d.cover().base_size(); ++i) {
    ++r.checked;
    try {
      if (!(d.action(e, i) == identity_map(d.cover().chart(i)))) r.fail("rho_e is not the identity on chart " + std::to_string(i));
      if (!d.lift(e, i).is_identity()) r.fail("phi_e is not the identity on chart " + std::to_string(i));
      for (int g = 0; g < G.order(); ++g) {
        ++r.checked;
        if (d.lift(g, i).determinant().is_zero()) r.fail("phi of " + elem_chart(g, i) + " is not invertible");
        for (int h = 0; h < G.order(); ++h) {
          ++r.checked;
          const int gh = G.mul(g, h);
          if (!(compose(d.action(h, i), d.action(g, i)) == d.action(gh, i))) {
            r.fail("rho_" + std::to_string(gh) + " != rho_" + std::to_string(h) + " o rho_" + std::to_string(g) +
                   " on chart " + std::to_string(i));
          }
          RFMatrix lhs = pullback(d.lift(h, i), d.action(g, i)) * d.lift(g, i);
          if (lhs != d.lift(gh, i)) {
            r.fail("phi_" + std::to_string(gh) + " != (rho_" + std::to_string(g) + "^* phi_" + std::to_string(h) +
                   ") phi_" + std::to_string(g) + " on chart " + std::to_string(i));
          }
        }
      }
    } catch (const std::invalid_argument& ex) {
      r.fail(ex.what());
    }
  }
  return r;
}

MatrixForm nabla_phi(const EquivariantBundleData& d, int g, int chart) {
  const ChartPtr& c = d.cover().chart(chart);
  Pullback rho(d.action(g, chart));
  return apply_connection(MatrixForm::from_matrix(c, d.lift(g, chart)), d.connection(chart),
                          pullback(d.connection(chart), rho));
}

NerveSimplex word_simplex(const EquivariantBundleData& d, const std::vector<int>& word, int chart) {
  const ChartPtr& c = d.cover().chart(chart);
  NerveSimplex s;
  s.chart = c;
  RationalMap composite = identity_map(c);  // R_m = rho_{g_m} o R_{m-1}
  s.connections.push_back(d.connection(chart));
  for (int g : word) {
    s.morphisms.push_back(pullback(d.lift(g, chart), composite));
    composite = compose(d.action(g, chart), composite);
    s.connections.push_back(pullback(d.connection(chart), Pullback(composite)));
  }
  return s;
}

EquivariantReport equivariant_check(const EquivariantBundleData& d, int max_word) {
  EquivariantReport out;
  out.laws = validate_equivariant_data(d);
  out.invariance.name = "invariance";
  out.vanishing.name = "vanishing";
  if (!out.laws.ok) return out;
  const int order = d.group().order();
  const int charts = d.cover().base_size();
  for (int i = 0; i < charts; ++i) {
    for (int g = 0; g < order; ++g) {
      ++out.invariance.checked;
      MatrixForm nab = nabla_phi(d, g, i);
      if (!nab.is_zero()) out.invariance.fail("nabla(phi) of " + elem_chart(g, i) + " = " + nab.to_string());
    }
  }
  out.invariant = out.invariance.ok;
  const int bound = max_word > 0 ? max_word : order;
  for (int i = 0; i < charts; ++i) {
    std::vector<int> word;
    std::function<void()> rec = [&]() {
      if (!word.empty()) {
        ++out.vanishing.checked;
        UPolyForm v = ch_nerve_simplex(word_simplex(d, word, i));
        if (!v.is_zero()) {
          out.nonzero_words.emplace_back(word, v);
          if (out.invariant) out.vanishing.fail("word " + word_string(word) + " on chart " + std::to_string(i) + ": " + v.to_string());
        }
      }
      if (static_cast<int>(word.size()) == bound) return;
      for (int g = 0; g < order; ++g) {
        word.push_back(g);
        rec();
        word.pop_back();
      }
    };
    rec();
  }
  return out;
}

}  // namespace holochern
