#include "holochern/chern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace holochern {

namespace {

std::string pair_string(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

UPolyForm ch_nerve_simplex(const NerveSimplex& s) {
  if (s.connections.size() != s.morphisms.size() + 1) throw std::invalid_argument("nerve simplex needs l + 1 objects");
  for (std::size_t m = 0; m < s.morphisms.size(); ++m) {
    const RFMatrix& f = s.morphisms[m];
    if (f.cols() != s.connections[m].rows() || f.rows() != s.connections[m + 1].rows()) {
      throw std::invalid_argument("dimension mismatch along the composition at step " + std::to_string(m));
    }
  }
  const int l = s.dim();
  if (l == 0) return UPolyForm::monomial(0, HoloForm::function(s.chart, static_cast<long>(s.connections[0].rows())));
  // An l-form on a chart of smaller dimension vanishes.
  if (l > static_cast<int>(s.chart->coords.size())) return UPolyForm();
  RFMatrix composite = s.morphisms[0];
  for (int m = 1; m < l; ++m) composite = s.morphisms[m] * composite;
  MatrixForm body = apply_connection(MatrixForm::from_matrix(s.chart, s.morphisms[0]), s.connections[0], s.connections[1]);
  for (int m = 1; m < l; ++m) {
    MatrixForm nf = apply_connection(MatrixForm::from_matrix(s.chart, s.morphisms[m]), s.connections[m],
                                     s.connections[m + 1]);
    body = nf * body;
  }
  MatrixForm inv = MatrixForm::from_matrix(s.chart, composite.inverse());
  return UPolyForm::monomial(l, trace_form(inv * body));
}

NerveSimplex nerve_face(const NerveSimplex& s, int j) {
  const int l = s.dim();
  if (j < 0 || j > l || l == 0) throw std::invalid_argument("face index out of range");
  NerveSimplex out{s.chart, s.connections, s.morphisms};
  out.connections.erase(out.connections.begin() + j);
  if (j == 0) {
    out.morphisms.erase(out.morphisms.begin());
  } else if (j == l) {
    out.morphisms.pop_back();
  } else {
    out.morphisms[j - 1] = s.morphisms[j] * s.morphisms[j - 1];
    out.morphisms.erase(out.morphisms.begin() + j);
  }
  return out;
}

CheckReport verify_face_sum(const NerveSimplex& s) {
  CheckReport r;
  r.name = "face sum";
  UPolyForm sum;
  for (int j = 0; j <= s.dim(); ++j) {
    UPolyForm v = ch_nerve_simplex(nerve_face(s, j));
    sum += j % 2 == 0 ? v : -v;
  }
  ++r.checked;
  if (!sum.is_zero()) r.fail("alternating face sum = " + sum.to_string());
  return r;
}

// ---------------------------------------------------------------- vertex data

BundleVertexData::BundleVertexData(Cover cover, int rank) : cover_(std::move(cover)), rank_(rank) {
  for (int i = 0; i < cover_.base_size(); ++i) connections_.push_back(zero_connection(cover_.chart(i), rank));
}

void BundleVertexData::set_transition(int i, int j, RFMatrix g) {
  if (static_cast<int>(g.rows()) != rank_ || static_cast<int>(g.cols()) != rank_) {
    throw std::invalid_argument("transition " + pair_string(i, j) + " has the wrong size");
  }
  stored_[{i, j}] = std::move(g);
  derived_.clear();
}

void BundleVertexData::set_connection(int i, ConnectionMatrix a) {
  validate_connection(a);
  if (static_cast<int>(a.rows()) != rank_ || !same_chart(a.chart(), cover_.chart(i))) {
    throw std::invalid_argument("connection on chart " + std::to_string(i) + " has the wrong shape or chart");
  }
  connections_.at(i) = std::move(a);
}

bool BundleVertexData::has_transition(int i, int j) const {
  return i == j || stored_.count({i, j}) || stored_.count({j, i});
}

RFMatrix BundleVertexData::g(int i, int j) const {
  auto it = stored_.find({i, j});
  if (it != stored_.end()) return it->second;
  if (i == j) return RFMatrix::identity(rank_);
  auto dv = derived_.find({i, j});
  if (dv != derived_.end()) return dv->second;
  auto rev = stored_.find({j, i});
  if (rev == stored_.end()) throw std::invalid_argument("no transition " + pair_string(i, j));
  return derived_.emplace(std::make_pair(i, j), rev->second.inverse()).first->second;
}

RFMatrix BundleVertexData::g_in(int i, int j, int chart) const {
  return cover_.to_chart(g(i, j), std::min(i, j), chart);
}

ConnectionMatrix BundleVertexData::connection_in(int i, int chart) const {
  return cover_.restrict(connections_.at(i), i, chart);
}

// ---------------------------------------------------------------- path data

BundlePathData::BundlePathData(std::vector<BundleVertexData> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw std::invalid_argument("path data needs at least one level");
}

void BundlePathData::set_intertwiner(int p, int i, RFMatrix f) {
  if (p < 1 || p > n()) throw std::invalid_argument("intertwiner level out of range");
  if (static_cast<int>(f.rows()) != level(p).rank() || static_cast<int>(f.cols()) != level(p - 1).rank()) {
    throw std::invalid_argument("intertwiner has the wrong size");
  }
  f_[{p, i}] = std::move(f);
}

const RFMatrix& BundlePathData::intertwiner(int p, int i) const {
  auto it = f_.find({p, i});
  if (it == f_.end()) throw std::invalid_argument("missing intertwiner f^" + std::to_string(p) + "_" + std::to_string(i));
  return it->second;
}

RFMatrix BundlePathData::f(int b, int a, int i) const {
  if (b < a) throw std::invalid_argument("f^(b,a) needs b >= a");
  RFMatrix out = RFMatrix::identity(level(a).rank());
  for (int p = a + 1; p <= b; ++p) out = intertwiner(p, i) * out;
  return out;
}

// ---------------------------------------------------------------- validation

CheckReport validate_bundle_data(const BundleVertexData& d) {
  CheckReport r;
  r.name = "bundle";
  const Cover& c = d.cover();
  for (int i = 0; i < c.base_size(); ++i) {
    ++r.checked;
    if (!d.g(i, i).is_identity()) r.fail("g" + pair_string(i, i) + " is not the identity");
  }
  for (const auto& t : c.tuples(1)) {
    ++r.checked;
    if (!d.has_transition(t[0], t[1])) {
      r.fail("missing transition " + pair_string(t[0], t[1]));
      continue;
    }
    if (t[0] > t[1]) continue;
    RFMatrix g = d.g(t[0], t[1]);
    if (g.determinant().is_zero()) {
      r.fail("g" + pair_string(t[0], t[1]) + " is not invertible");
      continue;
    }
    if (!(g * d.g(t[1], t[0])).is_identity()) r.fail("g" + pair_string(t[0], t[1]) + " g" + pair_string(t[1], t[0]) + " != id");
  }
  if (!r.ok) return r;
  for (const auto& t : c.tuples(2)) {
    ++r.checked;
    int a = c.anchor(t);
    RFMatrix lhs = d.g_in(t[0], t[1], a) * d.g_in(t[1], t[2], a);
    if (lhs != d.g_in(t[0], t[2], a)) {
      r.fail("cocycle fails at (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
             ")");
    }
  }
  return r;
}

CheckReport validate_bundle_data(const BundlePathData& d) {
  CheckReport r;
  r.name = "bundle path";
  for (int p = 0; p <= d.n(); ++p) {
    CheckReport lv = validate_bundle_data(d.level(p));
    for (auto& w : lv.witnesses) w = "level " + std::to_string(p) + ": " + w;
    r.merge(lv);
  }
  const Cover& c = d.cover();
  for (int p = 1; p <= d.n(); ++p) {
    for (int i = 0; i < c.base_size(); ++i) {
      ++r.checked;
      if (d.intertwiner(p, i).determinant().is_zero()) {
        r.fail("f^" + std::to_string(p) + "_" + std::to_string(i) + " is not invertible");
      }
    }
    if (!r.ok) continue;
    for (const auto& t : c.tuples(1)) {
      ++r.checked;
      int i = t[0];
      int j = t[1];
      int a = std::min(i, j);
      RFMatrix lhs = c.to_chart(d.intertwiner(p, i), i, a) * d.level(p - 1).g_in(i, j, a);
      RFMatrix rhs = d.level(p).g_in(i, j, a) * c.to_chart(d.intertwiner(p, j), j, a);
      if (lhs != rhs) r.fail("intertwining fails for f^" + std::to_string(p) + " on " + pair_string(i, j));
    }
  }
  return r;
}

// ---------------------------------------------------------------- Tot(Ch)

NerveSimplex path_simplex(const BundlePathData& d, const std::vector<std::pair<int, int>>& vertices, int chart) {
  const Cover& c = d.cover();
  NerveSimplex s;
  s.chart = c.chart(chart);
  for (const auto& [i, j] : vertices) s.connections.push_back(d.level(j).connection_in(i, chart));
  for (std::size_t t = 1; t < vertices.size(); ++t) {
    auto [i0, j0] = vertices[t - 1];
    auto [i1, j1] = vertices[t];
    if (j0 == j1) {
      s.morphisms.push_back(d.level(j0).g_in(i1, i0, chart));
    } else if (i0 == i1 && j1 > j0) {
      s.morphisms.push_back(c.to_chart(d.f(j1, j0, i0), i0, chart));
    } else {
      throw std::invalid_argument("lattice path steps must change the chart or the level, not both");
    }
  }
  return s;
}

UPolyCochain tot_ch_vertex(const BundleVertexData& d, int max_level) {
  const Cover& c = d.cover();
  UPolyCochain out;
  for (const auto& t : c.tuples_up_to(max_level)) {
    int a = c.anchor(t);
    NerveSimplex s;
    s.chart = c.chart(a);
    for (int i : t) s.connections.push_back(d.connection_in(i, a));
    for (std::size_t m = 1; m < t.size(); ++m) s.morphisms.push_back(d.g_in(t[m], t[m - 1], a));
    out.set(t, ch_nerve_simplex(s));
  }
  return out;
}

UPolyCochain tot_ch_simplex(const BundlePathData& d, const Generator& e, int max_level) {
  if (e.ambient != d.n()) throw std::invalid_argument("generator " + e.to_string() + " is not a simplex of the path");
  for (int j : e.indices) {
    if (j < 0 || j > d.n()) throw std::invalid_argument("generator index out of range");
  }
  const int p = e.dim();
  const long half = static_cast<long>(p) * (p - 1) / 2;
  const Cover& c = d.cover();
  UPolyCochain out;
  for (const auto& t : c.tuples_up_to(max_level)) {
    int a = c.anchor(t);
    const int l = static_cast<int>(t.size()) - 1;
    UPolyForm sum;
    for (const auto& s : step_positions(p, l)) {
      std::vector<std::pair<int, int>> vertices;
      for (const auto& [i, m] : lift_tuple(t, s)) vertices.emplace_back(i, e.indices[m]);
      UPolyForm v = ch_nerve_simplex(path_simplex(d, vertices, a));
      sum += step_sign(s) > 0 ? v : -v;
    }
    out.set(t, half % 2 == 0 ? sum : -sum);
  }
  return out;
}

ChainMapTable tot_ch_table(const BundlePathData& d, int max_level) {
  ChainMapTable table;
  for (const auto& e : all_generators(d.n())) table[e] = tot_ch_simplex(d, e, max_level);
  return table;
}

}  // namespace holochern
