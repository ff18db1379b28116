#include "holochern/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "holochern/parser.hpp"
#include "holochern/selftest.hpp"

namespace holochern {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ManifestError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ManifestError(where + ": expected an integer");
  return j.get<int>();
}

std::string as_expr(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw ManifestError(where + ": expected an expression string");
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ManifestError(where + ": expected an array");
  return j;
}

class ChartNames {
 public:
  explicit ChartNames(const std::vector<ChartPtr>& charts) : charts_(charts) {}

  int resolve(const json& j, const std::string& where) const {
    if (j.is_number_integer()) {
      int i = j.get<int>();
      if (i < 0 || i >= static_cast<int>(charts_.size())) throw ManifestError(where + ": chart index out of range");
      return i;
    }
    if (j.is_string()) {
      for (std::size_t i = 0; i < charts_.size(); ++i) {
        if (charts_[i]->name == j.get<std::string>()) return static_cast<int>(i);
      }
      throw ManifestError(where + ": unknown chart \"" + j.get<std::string>() + "\"");
    }
    throw ManifestError(where + ": expected a chart index or name");
  }

 private:
  const std::vector<ChartPtr>& charts_;
};

RFMatrix parse_matrix(const json& j, const ChartPtr& chart, int rows, int cols, const std::string& where) {
  as_array(j, where);
  if (static_cast<int>(j.size()) != rows) throw ManifestError(where + ": expected " + std::to_string(rows) + " rows");
  RFMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = as_array(j[r], where);
    if (static_cast<int>(row.size()) != cols) {
      throw ManifestError(where + ": expected " + std::to_string(cols) + " columns");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = parse_expr(as_expr(row[c], where), chart->coords);
  }
  return m;
}

ConnectionMatrix parse_connection(const json& j, const ChartPtr& chart, int rank, const std::string& where) {
  as_array(j, where);
  if (static_cast<int>(j.size()) != rank) throw ManifestError(where + ": expected " + std::to_string(rank) + " rows");
  ConnectionMatrix a(chart, rank, rank);
  for (int r = 0; r < rank; ++r) {
    const json& row = as_array(j[r], where);
    if (static_cast<int>(row.size()) != rank) {
      throw ManifestError(where + ": expected " + std::to_string(rank) + " columns");
    }
    for (int c = 0; c < rank; ++c) a(r, c) = parse_form(as_expr(row[c], where), chart);
  }
  try {
    validate_connection(a);
  } catch (const std::exception& e) {
    throw ManifestError(where + ": " + e.what());
  }
  return a;
}

Cover parse_cover(const json& j) {
  std::vector<ChartPtr> charts;
  for (const auto& c : as_array(require(j, "charts", "manifest"), "charts")) {
    std::string name = require(c, "name", "chart").get<std::string>();
    std::vector<std::string> coords;
    for (const auto& v : as_array(require(c, "coords", "chart " + name), "chart " + name)) {
      coords.push_back(v.get<std::string>());
    }
    charts.push_back(make_chart(name, coords));
  }
  if (charts.empty()) throw ManifestError("charts: at least one chart is needed");
  ChartNames names(charts);
  Cover cover;
  if (j.contains("overlaps")) {
    std::vector<std::vector<int>> overlaps;
    for (const auto& o : as_array(j.at("overlaps"), "overlaps")) {
      const json& t = o.is_object() ? require(o, "tuple", "overlap") : o;
      std::vector<int> s;
      for (const auto& x : as_array(t, "overlap")) s.push_back(names.resolve(x, "overlap"));
      if (o.is_object() && o.contains("anchor") &&
          names.resolve(o.at("anchor"), "overlap anchor") != *std::min_element(s.begin(), s.end())) {
        throw ManifestError("overlap anchor must be the chart of minimal index");
      }
      overlaps.push_back(s);
    }
    try {
      cover = Cover(charts, overlaps);
    } catch (const std::invalid_argument& e) {
      throw ManifestError(std::string("overlaps: ") + e.what());
    }
  } else {
    cover = Cover::complete(charts);
  }
  if (j.contains("changeMaps")) {
    for (const auto& cm : as_array(j.at("changeMaps"), "changeMaps")) {
      int from = names.resolve(require(cm, "from", "change map"), "change map");
      int to = names.resolve(require(cm, "to", "change map"), "change map");
      const std::string where = "change map " + charts[from]->name + " -> " + charts[to]->name;
      const json& comps = as_array(require(cm, "map", where), where);
      if (comps.size() != charts[to]->coords.size()) throw ManifestError(where + ": wrong number of components");
      std::vector<RationalFunction> f;
      for (const auto& e : comps) f.push_back(parse_expr(as_expr(e, where), charts[from]->coords));
      cover.add_change_map(from, to, f);
    }
  }
  return cover;
}

BundleVertexData parse_level(const json& j, const Cover& cover, int rank, const std::string& where) {
  ChartNames names(cover.charts());
  BundleVertexData v(cover, rank);
  if (j.contains("transitions")) {
    for (const auto& t : as_array(j.at("transitions"), where + " transitions")) {
      int i = names.resolve(require(t, "i", where), where);
      int k = names.resolve(require(t, "j", where), where);
      const std::string at = where + " transition (" + std::to_string(i) + "," + std::to_string(k) + ")";
      v.set_transition(i, k, parse_matrix(require(t, "matrix", at), cover.chart(std::min(i, k)), rank, rank, at));
    }
  }
  if (j.contains("connections")) {
    for (const auto& c : as_array(j.at("connections"), where + " connections")) {
      int i = names.resolve(require(c, "chart", where), where);
      const std::string at = where + " connection on chart " + std::to_string(i);
      v.set_connection(i, parse_connection(require(c, "matrix", at), cover.chart(i), rank, at));
    }
  }
  return v;
}

void parse_bundle(const json& b, Manifest& m) {
  int rank = as_int(require(b, "rank", "bundle"), "bundle rank");
  if (rank < 1) throw ManifestError("bundle rank must be positive");
  std::vector<const json*> level_json;
  if (b.contains("levels")) {
    for (const auto& l : as_array(b.at("levels"), "bundle levels")) level_json.push_back(&l);
    if (level_json.empty()) throw ManifestError("bundle levels: at least one level is needed");
  } else {
    level_json.push_back(&b);
  }
  std::vector<BundleVertexData> levels;
  BGMapData bg(m.cover, rank, static_cast<int>(level_json.size()) - 1);
  for (std::size_t p = 0; p < level_json.size(); ++p) {
    levels.push_back(parse_level(*level_json[p], m.cover, rank, "bundle level " + std::to_string(p)));
  }
  ChartNames names(m.cover.charts());
  for (std::size_t p = 0; p < level_json.size(); ++p) {
    if (!level_json[p]->contains("transitions")) continue;
    for (const auto& t : level_json[p]->at("transitions")) {
      int i = names.resolve(t.at("i"), "transition");
      int k = names.resolve(t.at("j"), "transition");
      bg.set_transition(static_cast<int>(p), i, k,
                        parse_matrix(t.at("matrix"), m.cover.chart(std::min(i, k)), rank, rank, "transition"));
    }
  }
  BundlePathData d(std::move(levels));
  if (b.contains("intertwiners")) {
    for (const auto& f : as_array(b.at("intertwiners"), "intertwiners")) {
      int p = as_int(require(f, "level", "intertwiner"), "intertwiner level");
      int i = names.resolve(require(f, "chart", "intertwiner"), "intertwiner");
      const std::string at = "intertwiner f^" + std::to_string(p) + "_" + std::to_string(i);
      if (p < 1 || p > d.n()) throw ManifestError(at + ": level out of range");
      RFMatrix mat = parse_matrix(require(f, "matrix", at), m.cover.chart(i), rank, rank, at);
      d.set_intertwiner(p, i, mat);
      bg.set_intertwiner(p, i, mat);
    }
  }
  for (int p = 1; p <= d.n(); ++p) {
    for (int i = 0; i < m.cover.base_size(); ++i) {
      if (!bg.intertwiners().count({p, i})) {
        throw ManifestError("missing intertwiner f^" + std::to_string(p) + "_" + std::to_string(i));
      }
    }
  }
  m.bundle = std::move(d);
  m.bg = std::move(bg);
}

void parse_group(const json& g, Manifest& m) {
  if (!m.bundle) throw ManifestError("group: a bundle section is needed");
  FiniteGroup group;
  if (g.contains("cyclic")) {
    int n = as_int(g.at("cyclic"), "group cyclic");
    if (n < 1) throw ManifestError("group cyclic: order must be positive");
    group = FiniteGroup::cyclic(n);
  } else {
    std::vector<std::vector<int>> table;
    for (const auto& row : as_array(require(g, "table", "group"), "group table")) {
      table.push_back(row.get<std::vector<int>>());
    }
    try {
      group = FiniteGroup(table);
    } catch (const std::invalid_argument& e) {
      throw ManifestError(std::string("group table: ") + e.what());
    }
  }
  const Cover& cover = m.cover;
  const int rank = m.bundle->level(0).rank();
  EquivariantBundleData d(cover, group, rank);
  ChartNames names(cover.charts());
  auto element = [&](const json& j) {
    int e = as_int(require(j, "element", "group entry"), "group element");
    if (e < 0 || e >= group.order()) throw ManifestError("group element out of range");
    return e;
  };
  std::set<std::pair<int, int>> actions;
  std::set<std::pair<int, int>> lifts;
  for (const auto& a : as_array(require(g, "actions", "group"), "group actions")) {
    int e = element(a);
    int i = names.resolve(require(a, "chart", "action"), "action");
    const ChartPtr& c = cover.chart(i);
    const std::string at = "action of " + std::to_string(e) + " on chart " + std::to_string(i);
    const json& comps = as_array(require(a, "map", at), at);
    if (comps.size() != c->coords.size()) throw ManifestError(at + ": wrong number of components");
    std::vector<RationalFunction> f;
    for (const auto& x : comps) f.push_back(parse_expr(as_expr(x, at), c->coords));
    d.set_action(e, i, RationalMap{c, c, f});
    actions.insert({e, i});
  }
  for (const auto& l : as_array(require(g, "lifts", "group"), "group lifts")) {
    int e = element(l);
    int i = names.resolve(require(l, "chart", "lift"), "lift");
    const std::string at = "lift of " + std::to_string(e) + " on chart " + std::to_string(i);
    d.set_lift(e, i, parse_matrix(require(l, "matrix", at), cover.chart(i), rank, rank, at));
    lifts.insert({e, i});
  }
  for (int e = 0; e < group.order(); ++e) {
    if (e == group.identity()) continue;
    for (int i = 0; i < cover.base_size(); ++i) {
      const std::string at = " for element " + std::to_string(e) + " on chart " + std::to_string(i);
      if (!actions.count({e, i})) throw ManifestError("missing action" + at);
      if (!lifts.count({e, i})) throw ManifestError("missing lift" + at);
    }
  }
  for (int i = 0; i < cover.base_size(); ++i) d.set_connection(i, m.bundle->level(0).connection(i));
  m.equivariant = std::move(d);
}

std::string constant_or_expr(const RationalFunction& f) {
  return f.is_constant() ? f.constant_value().to_string() : f.to_string();
}

CheckReport cover_check(const Cover& cover) {
  CheckReport r = cover.validate();
  for (const auto& w : r.witnesses) {
    if (w.rfind("missing change map", 0) == 0) throw MissingChangeMap(w);
  }
  return r;
}

int default_level(const std::string& mode, const Manifest& m) {
  int top = m.cover.base_size() - 1;
  if (mode == "gamma" && m.bg) {
    std::size_t dim = 0;
    for (const auto& c : m.cover.charts()) dim = std::max(dim, c->coords.size());
    int lifted_top = m.cover.base_size() * (m.bg->n() + 1) - 1;
    return std::min(lifted_top, static_cast<int>(dim) + 1);
  }
  return top;
}

const BundlePathData& need_bundle(const Manifest& m, const std::string& mode) {
  if (!m.bundle) throw ManifestError("mode " + mode + " needs a bundle section");
  return *m.bundle;
}

const BGMapData& need_bg(const Manifest& m, const std::string& mode) {
  if (!m.bg) throw ManifestError("mode " + mode + " needs a bundle section");
  return *m.bg;
}

CheckReport delta_check(const Cover& cover, const CechCochain& c, int max_level) {
  CheckReport r;
  r.name = "closed";
  for (const auto& t : cover.tuples_up_to(max_level + 1)) {
    if (t.size() < 2) continue;
    ++r.checked;
    HoloForm d = delta_at(cover, c, t);
    if (!d.is_zero()) r.fail("delta at " + cover.tuple_to_string(t) + " = " + d.to_string());
  }
  return r;
}

bool all_ok(const std::vector<CheckReport>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.ok; });
}

void run_vertex(const Manifest& m, int level, RunResult& out) {
  const BundleVertexData& d = need_bundle(m, "vertex").level(0);
  CheckReport data = validate_bundle_data(d);
  out.checks.push_back(data);
  if (!data.ok) return;
  UPolyCochain ch = tot_ch_vertex(d, level);
  CheckReport closed = check_closed(m.cover, ch, level);
  out.checks.push_back(closed);
  out.results["closed"] = closed.ok ? "yes" : "no";
  out.artifact = serialize(m.cover, ch);
  if (m.cover.chart(0)->coords.empty() || level < 1) return;
  ordered_json residues = ordered_json::object();
  std::optional<std::string> headline;
  for (const auto& t : m.cover.tuples(1)) {
    if (m.cover.anchor(t) != 0) continue;
    auto res = residue_at_zero(ch.at(t).coefficient(1));
    if (!res) continue;
    std::string s = constant_or_expr(*res);
    residues[m.cover.tuple_to_string(t)] = s;
    if (t == Tuple{1, 0}) headline = s;
  }
  out.results["residues"] = residues;
  if (headline) out.results["residue"] = *headline;
}

void run_simplex(const Manifest& m, int level, RunResult& out) {
  const BundlePathData& d = need_bundle(m, "simplex");
  CheckReport data = validate_bundle_data(d);
  out.checks.push_back(data);
  if (!data.ok) return;
  ChainMapTable t = tot_ch_table(d, level);
  CheckReport chain = validate_chain_map(m.cover, t, d.n(), level);
  chain.name = "chain map";
  out.checks.push_back(chain);
  out.results["levels"] = d.n() + 1;
  out.results["generators"] = t.size();
  out.results["chain map"] = chain.ok ? "yes" : "no";
  out.artifact = serialize_table(m.cover, t);
}

void run_gamma(const Manifest& m, int level, RunResult& out) {
  const BGMapData& h = need_bg(m, "gamma");
  CheckReport data = validate_bg_data(h);
  out.checks.push_back(data);
  if (!data.ok) return;
  Cover lifted = m.cover.lifted(h.n());
  CechCochain g = gamma(h, level);
  CheckReport closed = delta_check(lifted, g, level);
  out.checks.push_back(closed);
  out.results["closed"] = closed.ok ? "yes" : "no";
  out.results["components"] = g.components().size();
  out.artifact = serialize(lifted, u_truncate(g, 0));
}

void run_iota(const Manifest& m, int level, RunResult& out) {
  const BGMapData& h = need_bg(m, "iota");
  CheckReport data = validate_bg_data(h);
  out.checks.push_back(data);
  if (!data.ok) return;
  Cover lifted = m.cover.lifted(h.n());
  ChainMapTable t = iota(lifted, gamma(h, level + h.n()), level);
  CheckReport chain = validate_chain_map(m.cover, t, h.n(), level);
  chain.name = "chain map";
  out.checks.push_back(chain);
  out.results["generators"] = t.size();
  out.results["chain map"] = chain.ok ? "yes" : "no";
  out.artifact = serialize_table(m.cover, t);
}

void run_square(const Manifest& m, int level, RunResult& out) {
  const BGMapData& h = need_bg(m, "square");
  CheckReport data = validate_bg_data(h);
  out.checks.push_back(data);
  if (!data.ok) return;
  CheckReport sq = verify_square(h, level);
  sq.name = "square";
  out.checks.push_back(sq);
  out.results["commutes"] = sq.ok ? "yes" : "no";
  out.artifact = serialize_table(m.cover, tot_ch_table(beta(h), level));
}

void run_equivariant(const Manifest& m, RunResult& out) {
  if (!m.equivariant) throw ManifestError("mode equivariant needs a group section");
  const EquivariantBundleData& d = *m.equivariant;
  EquivariantReport r = equivariant_check(d, m.max_word);
  out.checks.push_back(r.laws);
  if (!r.laws.ok) return;
  if (r.invariant) out.checks.push_back(r.vanishing);
  out.results["invariant"] = r.invariant ? "yes" : "no";
  out.results["invariance witnesses"] = r.invariance.witnesses;
  if (r.invariant) out.results["vanishing"] = r.vanishing.ok ? "yes" : "no";
  out.results["nonzero words"] = r.nonzero_words.size();
  std::string art;
  for (const auto& [word, v] : r.nonzero_words) {
    std::string w;
    for (std::size_t k = 0; k < word.size(); ++k) w += (k ? "," : "") + std::to_string(word[k]);
    UPolyCochain c;
    c.set({0}, v);
    art += "@ word(" + w + ")\n" + serialize(m.cover, c);
  }
  out.artifact = art;
}

ordered_json check_json(const CheckReport& c) {
  ordered_json j;
  j["name"] = c.name;
  j["status"] = c.ok ? "pass" : "fail";
  j["checked"] = c.checked;
  j["witnesses"] = c.witnesses;
  return j;
}

std::string status_word(const RunResult& r) {
  if (r.exit_code == 2) return "error";
  return r.exit_code == 0 ? "pass" : "fail";
}

}  // namespace

std::optional<RationalFunction> residue_at_zero(const HoloForm& w) {
  if (w.is_zero()) return RationalFunction();
  if (!w.chart() || w.chart()->coords.empty()) return std::nullopt;
  RationalFunction f;
  for (const auto& [idx, g] : w.terms()) {
    if (idx != IndexSet{0}) return std::nullopt;
    f = g;
  }
  const std::string& z = w.chart()->coords[0];
  const VarList& vars = *f.vars();
  auto it = std::find(vars.begin(), vars.end(), z);
  if (it == vars.end()) return RationalFunction();
  const std::size_t v = static_cast<std::size_t>(it - vars.begin());
  auto series = [&](const Polynomial& p) {
    std::vector<RationalFunction> c;
    for (const auto& q : p.coefficients_in(v)) c.emplace_back(q);
    return c;
  };
  std::vector<RationalFunction> num = series(f.num());
  std::vector<RationalFunction> den = series(f.den());
  auto valuation = [](const std::vector<RationalFunction>& c) {
    std::size_t k = 0;
    while (k < c.size() && c[k].is_zero()) ++k;
    return static_cast<long>(k);
  };
  const long a = valuation(num);
  const long e = valuation(den);
  // f = z^{a-e} N/D with D(0) != 0; the residue is the z^{e-a-1} coefficient of N/D.
  const long want = e - a - 1;
  if (want < 0) return RationalFunction();
  auto nk = [&](long k) { return a + k < static_cast<long>(num.size()) ? num[a + k] : RationalFunction(); };
  auto dk = [&](long k) { return e + k < static_cast<long>(den.size()) ? den[e + k] : RationalFunction(); };
  std::vector<RationalFunction> q;
  for (long k = 0; k <= want; ++k) {
    RationalFunction s = nk(k);
    for (long j = 1; j <= k; ++j) s -= dk(j) * q[k - j];
    q.push_back(s / dk(0));
  }
  return q[want];
}

Manifest parse_manifest(const json& j) {
  if (!j.is_object()) throw ManifestError("manifest must be a JSON object");
  Manifest m;
  m.cover = parse_cover(j);
  if (j.contains("bundle")) parse_bundle(j.at("bundle"), m);
  if (j.contains("group")) parse_group(j.at("group"), m);
  if (j.contains("run")) {
    const json& r = j.at("run");
    if (r.contains("mode")) m.mode = r.at("mode").get<std::string>();
    if (r.contains("maxLevel")) m.max_level = as_int(r.at("maxLevel"), "run maxLevel");
    if (r.contains("maxWord")) m.max_word = as_int(r.at("maxWord"), "run maxWord");
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot read manifest " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
  }
  return parse_manifest(j);
}

std::vector<std::string> run_modes() {
  return {"vertex", "simplex", "gamma", "iota", "square", "equivariant", "selftest"};
}

std::string serialize_table(const Cover& cover, const ChainMapTable& t) {
  std::string out;
  for (const auto& [e, c] : t) out += "@ " + e.to_string() + "\n" + serialize(cover, c);
  return out;
}

RunResult run(const RunOptions& opts, const Manifest& m) {
  RunResult out;
  out.results = ordered_json::object();
  const auto start = std::chrono::steady_clock::now();
  const std::string mode = opts.mode.empty() ? m.mode : opts.mode;
  out.mode = mode;
  try {
    auto modes = run_modes();
    if (std::find(modes.begin(), modes.end(), mode) == modes.end()) {
      throw ManifestError("unknown mode \"" + mode + "\"");
    }
    if (mode == "selftest") {
      out.checks = run_selftest(opts.seed);
    } else {
      CheckReport cover = cover_check(m.cover);
      out.checks.push_back(cover);
      if (cover.ok) {
        int level = opts.max_level ? *opts.max_level : m.max_level ? *m.max_level : default_level(mode, m);
        if (level < 0) throw ManifestError("max level must be nonnegative");
        if (mode != "equivariant") out.results["maxLevel"] = level;
        if (mode == "vertex") run_vertex(m, level, out);
        if (mode == "simplex") run_simplex(m, level, out);
        if (mode == "gamma") run_gamma(m, level, out);
        if (mode == "iota") run_iota(m, level, out);
        if (mode == "square") run_square(m, level, out);
        if (mode == "equivariant") run_equivariant(m, out);
      }
    }
    out.exit_code = all_ok(out.checks) ? 0 : 1;
  } catch (const ParseError& e) {
    out.exit_code = 2;
    out.error = std::string("parse error: ") + e.what();
  } catch (const MissingChangeMap& e) {
    out.exit_code = 2;
    out.error = std::string("missing change map: ") + e.what();
  } catch (const ManifestError& e) {
    out.exit_code = 2;
    out.error = e.what();
  } catch (const std::invalid_argument& e) {
    out.exit_code = 2;
    out.error = e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

RunResult run(const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  out.mode = opts.mode;
  if (opts.mode == "selftest" && opts.manifest_path.empty()) return run(opts, Manifest{});
  try {
    if (opts.manifest_path.empty()) throw ManifestError("a manifest is needed for this mode");
    Manifest m = load_manifest(opts.manifest_path);
    if (opts.mode.empty() && m.mode.empty()) throw ManifestError("no mode given");
    out = run(opts, m);
  } catch (const ParseError& e) {
    out.exit_code = 2;
    out.error = std::string("parse error: ") + e.what();
  } catch (const MissingChangeMap& e) {
    out.exit_code = 2;
    out.error = std::string("missing change map: ") + e.what();
  } catch (const ManifestError& e) {
    out.exit_code = 2;
    out.error = e.what();
  } catch (const std::invalid_argument& e) {
    out.exit_code = 2;
    out.error = e.what();
  } catch (const json::exception& e) {
    out.exit_code = 2;
    out.error = std::string("manifest structure: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string text_report(const RunResult& r) {
  std::ostringstream s;
  s << "mode: " << r.mode << "\n";
  if (r.exit_code == 2) s << "error: " << r.error << "\n";
  for (const auto& c : r.checks) {
    s << "check " << c.name << ": " << (c.ok ? "pass" : "fail") << " (" << c.checked << " checked)\n";
    for (const auto& w : c.witnesses) s << "  witness: " << w << "\n";
  }
  for (const auto& [k, v] : r.results.items()) {
    if (k == "residues") {
      for (const auto& [t, x] : v.items()) s << "residue " << t << ": " << x.get<std::string>() << "\n";
    } else if (v.is_array()) {
      for (const auto& x : v) s << k << ": " << x.get<std::string>() << "\n";
    } else {
      s << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  s << "status: " << status_word(r) << "\n";
  return s.str();
}

ordered_json json_report(const RunResult& r) {
  ordered_json j;
  j["mode"] = r.mode;
  j["status"] = status_word(r);
  j["exitCode"] = r.exit_code;
  if (r.exit_code == 2) j["error"] = r.error;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
  j["results"] = r.results;
  j["timing"] = {{"seconds", r.seconds}};
  return j;
}

}  // namespace holochern
