#include "holochern/cech.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace holochern {

Tuple face(const Tuple& t, std::size_t j) {
  Tuple out;
  out.reserve(t.size() - 1);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k != j) out.push_back(t[k]);
  }
  return out;
}

int tot_sign(int d) {
  long e = static_cast<long>(d) * (d + 1) / 2;
  return e % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------- Cover

Cover::Cover(std::vector<ChartPtr> charts, const std::vector<std::vector<int>>& overlaps)
    : data_(std::make_shared<Data>()) {
  data_->charts = std::move(charts);
  int n = base_size();
  for (int i = 0; i < n; ++i) data_->overlaps.insert({i});
  for (auto s : overlaps) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) {
      if (v < 0 || v >= n) throw std::invalid_argument("overlap refers to unknown chart " + std::to_string(v));
    }
    std::size_t k = s.size();
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
      std::vector<int> sub;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (1ul << b)) sub.push_back(s[b]);
      }
      data_->overlaps.insert(sub);
    }
  }
}

Cover Cover::complete(std::vector<ChartPtr> charts) {
  std::vector<int> all(charts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Cover(std::move(charts), {all});
}

void Cover::add_change_map(int from, int to, std::vector<RationalFunction> components) {
  if (from < 0 || to < 0 || from >= base_size() || to >= base_size() || from == to) {
    throw std::invalid_argument("change map between invalid charts");
  }
  const ChartPtr& src = data_->charts[from];
  const ChartPtr& dst = data_->charts[to];
  if (components.size() != dst->coords.size()) {
    throw std::invalid_argument("change map needs one component per coordinate of chart " + dst->name);
  }
  for (const auto& f : components) {
    for (const auto& v : *f.vars()) {
      if (std::find(src->coords.begin(), src->coords.end(), v) == src->coords.end()) {
        throw std::invalid_argument("change map uses " + v + ", not a coordinate of chart " + src->name);
      }
    }
  }
  data_->stored[{from, to}] = RationalMap{src, dst, std::move(components)};
  data_->composed.clear();
  data_->pullbacks.clear();
}

Cover Cover::lifted(int k) const {
  Cover out = *this;
  out.levels_ = k + 1;
  return out;
}

bool Cover::overlap_declared(std::vector<int> bases) const {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return data_->overlaps.count(bases) > 0;
}

bool Cover::declared(const Tuple& t) const {
  if (t.empty()) return false;
  std::vector<int> bases;
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t[a] < 0 || t[a] >= size()) return false;
    for (std::size_t b = 0; b < a; ++b) {
      if (t[a] == t[b]) return false;
    }
    bases.push_back(base(t[a]));
  }
  return overlap_declared(bases);
}

int Cover::anchor(const Tuple& t) const {
  int m = base(t.at(0));
  for (int x : t) m = std::min(m, base(x));
  return m;
}

std::vector<Tuple> Cover::tuples(int q) const {
  std::vector<Tuple> out;
  if (q < 0) return out;
  Tuple cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == q + 1) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x < size(); ++x) {
      cur.push_back(x);
      if (declared(cur)) rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<Tuple> Cover::tuples_up_to(int max_level) const {
  std::vector<Tuple> out;
  for (int q = 0; q <= max_level; ++q) {
    auto t = tuples(q);
    out.insert(out.end(), t.begin(), t.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const RationalMap* Cover::find_map(int a, int b) const {
  if (a == b) {
    auto it = data_->composed.find({a, a});
    if (it == data_->composed.end()) it = data_->composed.emplace(std::make_pair(a, a), identity_map(data_->charts[a])).first;
    return &it->second;
  }
  auto st = data_->stored.find({a, b});
  if (st != data_->stored.end()) return &st->second;
  auto co = data_->composed.find({a, b});
  if (co != data_->composed.end()) return &co->second;
  // Shortest chain of stored maps from a to b.
  std::map<int, int> prev{{a, a}};
  std::deque<int> queue{a};
  while (!queue.empty() && !prev.count(b)) {
    int x = queue.front();
    queue.pop_front();
    for (const auto& [key, m] : data_->stored) {
      if (key.first == x && !prev.count(key.second)) {
        prev[key.second] = x;
        queue.push_back(key.second);
      }
    }
  }
  if (!prev.count(b)) return nullptr;
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  RationalMap m = data_->stored.at({path[0], path[1]});
  for (std::size_t k = 2; k < path.size(); ++k) m = compose(data_->stored.at({path[k - 1], path[k]}), m);
  return &data_->composed.emplace(std::make_pair(a, b), std::move(m)).first->second;
}

bool Cover::has_change_map(int a, int b) const { return find_map(a, b) != nullptr; }

const RationalMap& Cover::change_map(int a, int b) const {
  const RationalMap* m = find_map(a, b);
  if (!m) {
    throw MissingChangeMap("missing change map from chart " + data_->charts[a]->name + " to chart " +
                           data_->charts[b]->name);
  }
  return *m;
}

const Pullback& Cover::pullback(int a, int b) const {
  auto it = data_->pullbacks.find({a, b});
  if (it == data_->pullbacks.end()) {
    it = data_->pullbacks.emplace(std::make_pair(a, b), std::make_shared<Pullback>(change_map(a, b))).first;
  }
  return *it->second;
}

HoloForm Cover::restrict(const HoloForm& w, const Tuple& from, const Tuple& to) const {
  return to_chart(w, anchor(from), anchor(to));
}

HoloForm Cover::to_chart(const HoloForm& w, int from_chart, int to_chart) const {
  if (from_chart == to_chart) return w;
  return pullback(to_chart, from_chart)(w);
}

MatrixForm Cover::restrict(const MatrixForm& m, int from_chart, int to_chart) const {
  if (from_chart == to_chart) return m;
  return holochern::pullback(m, pullback(to_chart, from_chart));
}

RFMatrix Cover::to_chart(const RFMatrix& m, int from_chart, int to_chart) const {
  if (from_chart == to_chart) return m;
  const RationalMap& phi = change_map(to_chart, from_chart);
  std::map<std::string, RationalFunction> subst;
  for (std::size_t k = 0; k < phi.components.size(); ++k) subst[phi.target->coords[k]] = phi.components[k];
  return m.substitute(subst);
}

CheckReport Cover::validate() const {
  CheckReport r;
  r.name = "cover";
  for (const auto& s : data_->overlaps) {
    if (s.size() == 2) {
      ++r.checked;
      if (!has_change_map(s[0], s[1])) {
        r.fail("missing change map " + data_->charts[s[0]]->name + " -> " + data_->charts[s[1]]->name);
      }
    }
  }
  for (const auto& s : data_->overlaps) {
    if (s.size() != 3) continue;
    const RationalMap* ab = find_map(s[0], s[1]);
    const RationalMap* bc = find_map(s[1], s[2]);
    const RationalMap* ac = find_map(s[0], s[2]);
    if (!ab || !bc || !ac) continue;
    ++r.checked;
    if (!(compose(*bc, *ab) == *ac)) {
      r.fail("change maps do not compose on (" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
             std::to_string(s[2]) + ")");
    }
  }
  return r;
}

std::string Cover::tuple_to_string(const Tuple& t) const {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(base(t[k]));
    if (levels_ > 1) s += "^(" + std::to_string(level(t[k])) + ")";
  }
  return s + ")";
}

Tuple Cover::parse_tuple(const std::string& text) const {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("bad tuple " + text);
  Tuple t;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    int b = 0;
    int l = 0;
    auto caret = item.find("^(");
    if (caret == std::string::npos) {
      b = std::stoi(item);
    } else {
      b = std::stoi(item.substr(0, caret));
      l = std::stoi(item.substr(caret + 2, item.size() - caret - 3));
    }
    if (b < 0 || b >= base_size() || l < 0 || l >= levels_) throw std::invalid_argument("bad tuple " + text);
    t.push_back(index(b, l));
  }
  if (!declared(t)) throw std::invalid_argument("undeclared tuple " + text);
  return t;
}

// ---------------------------------------------------------------- UPolyForm

UPolyForm UPolyForm::monomial(int upow, const HoloForm& w) {
  UPolyForm p;
  p.add(upow, w);
  return p;
}

void UPolyForm::add(int upow, const HoloForm& w) {
  if (w.is_zero()) return;
  HoloForm kept(w.chart());
  for (const auto& [idx, f] : w.terms()) {
    if (static_cast<int>(idx.size()) <= 2 * upow) kept.add_term(idx, f);
  }
  if (kept.is_zero()) return;
  auto it = terms_.find(upow);
  if (it == terms_.end()) {
    terms_.emplace(upow, kept);
  } else {
    it->second += kept;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HoloForm UPolyForm::coefficient(int upow) const {
  auto it = terms_.find(upow);
  return it == terms_.end() ? HoloForm() : it->second;
}

UPolyForm UPolyForm::operator-() const {
  UPolyForm out;
  for (const auto& [m, w] : terms_) out.terms_.emplace(m, -w);
  return out;
}

UPolyForm& UPolyForm::operator+=(const UPolyForm& o) {
  for (const auto& [m, w] : o.terms_) add(m, w);
  return *this;
}

UPolyForm& UPolyForm::operator-=(const UPolyForm& o) {
  for (const auto& [m, w] : o.terms_) add(m, -w);
  return *this;
}

UPolyForm UPolyForm::scaled(const RationalFunction& f) const {
  UPolyForm out;
  for (const auto& [m, w] : terms_) out.add(m, w.scaled(f));
  return out;
}

UPolyForm UPolyForm::pulled_back(const Pullback& pb) const {
  UPolyForm out;
  for (const auto& [m, w] : terms_) out.add(m, pb(w));
  return out;
}

std::string UPolyForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, w] : terms_) {
    if (!s.empty()) s += " + ";
    s += "u^" + std::to_string(m) + " (" + w.to_string() + ")";
  }
  return s;
}

UPolyForm restrict(const Cover& cover, const UPolyForm& v, const Tuple& from, const Tuple& to) {
  int a = cover.anchor(to);
  int b = cover.anchor(from);
  if (a == b) return v;
  return v.pulled_back(cover.pullback(a, b));
}

// ---------------------------------------------------------------- formal presheaf

void FormalSection::add(const FormalSymbol& s, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalSection FormalSection::operator-() const { return scaled(GaussianRational(-1)); }

FormalSection& FormalSection::operator+=(const FormalSection& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FormalSection& FormalSection::operator-=(const FormalSection& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FormalSection FormalSection::scaled(const GaussianRational& c) const {
  FormalSection out;
  if (c.is_zero()) return out;
  for (const auto& [s, v] : terms_) out.terms_.emplace(s, v * c);
  return out;
}

std::string FormalSection::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + "*x" + std::to_string(s.gen) + "@(";
    for (std::size_t k = 0; k < s.origin.size(); ++k) out += (k ? "," : "") + std::to_string(s.origin[k]);
    out += ")";
  }
  return out;
}

int FormalComplex::add_generator(int degree) {
  degrees_.push_back(degree);
  int g = static_cast<int>(degrees_.size()) - 1;
  by_degree_[degree].push_back(g);
  return g;
}

void FormalComplex::set_differential(int gen, std::vector<std::pair<int, GaussianRational>> image) {
  for (const auto& [h, c] : image) {
    if (degree(h) != degree(gen) + 1) throw std::invalid_argument("d_A must raise the degree by one");
  }
  d_[gen] = std::move(image);
}

const std::vector<int>& FormalComplex::generators_of_degree(int k) const {
  static const std::vector<int> none;
  auto it = by_degree_.find(k);
  return it == by_degree_.end() ? none : it->second;
}

FormalSection FormalComplex::d(const FormalSection& s) const {
  FormalSection out;
  for (const auto& [sym, c] : s.terms()) {
    auto it = d_.find(sym.gen);
    if (it == d_.end()) continue;
    for (const auto& [h, a] : it->second) out.add(FormalSymbol{h, sym.origin}, c * a);
  }
  return out;
}

FormalComplex FormalComplex::random(std::mt19937& rng, int max_degree, int per_degree, bool with_differential) {
  FormalComplex cx;
  std::vector<std::vector<int>> cycles(max_degree + 2);
  std::vector<std::vector<int>> others(max_degree + 2);
  for (int k = 0; k <= max_degree; ++k) {
    for (int j = 0; j < per_degree; ++j) {
      int g = cx.add_generator(k);
      (j % 2 == 0 ? cycles : others)[k].push_back(g);
    }
  }
  if (!with_differential) return cx;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < max_degree; ++k) {
    for (int g : others[k]) {
      std::vector<std::pair<int, GaussianRational>> image;
      for (int h : cycles[k + 1]) {
        int c = coef(rng);
        if (c != 0) image.emplace_back(h, GaussianRational(c));
      }
      if (image.empty() && !cycles[k + 1].empty()) image.emplace_back(cycles[k + 1].front(), GaussianRational(1));
      cx.set_differential(g, image);
    }
  }
  return cx;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

FormalCochain random_formal_cochain(const FormalComplex& cx, int total_degree, std::uint64_t seed) {
  return [cx, total_degree, seed](const Tuple& t) {
    FormalSection s;
    int k = total_degree - (static_cast<int>(t.size()) - 1);
    if (k < 0) return s;
    std::uint64_t h = seed;
    for (int x : t) h = splitmix(h ^ (static_cast<std::uint64_t>(x) + 0x51ed27ull));
    for (int g : cx.generators_of_degree(k)) {
      h = splitmix(h + static_cast<std::uint64_t>(g));
      s.add(FormalSymbol{g, t}, GaussianRational(static_cast<long>(h % 9) - 4));
    }
    return s;
  };
}

namespace {

// Scales every symbol by (-1)^{q + deg}, q the Cech degree of the tuple.
FormalSection degree_signed(const FormalComplex& cx, const FormalSection& s, int q) {
  FormalSection out;
  for (const auto& [sym, c] : s.terms()) out.add(sym, (q + cx.degree(sym.gen)) % 2 == 0 ? c : -c);
  return out;
}

}  // namespace

FormalCochain formal_delta(FormalCochain c) {
  return [c](const Tuple& t) {
    FormalSection s;
    if (t.size() < 2) return s;
    for (std::size_t j = 0; j < t.size(); ++j) {
      FormalSection f = c(face(t, j));
      s += j % 2 == 0 ? f : -f;
    }
    return s;
  };
}

FormalCochain formal_d_internal(const FormalComplex& cx, FormalCochain c) {
  return [cx, c](const Tuple& t) { return cx.d(c(t)); };
}

FormalCochain formal_total_differential(const FormalComplex& cx, FormalCochain c) {
  FormalCochain dc = formal_delta(c);
  return [cx, c, dc](const Tuple& t) {
    int q = static_cast<int>(t.size()) - 1;
    return dc(t) - cx.d(degree_signed(cx, c(t), q));
  };
}

FormalCochain formal_tot_differential(const FormalComplex& cx, FormalCochain c) {
  FormalCochain signed_c = [cx, c](const Tuple& t) {
    return degree_signed(cx, c(t), static_cast<int>(t.size()) - 1);
  };
  FormalCochain ds = formal_delta(signed_c);
  return [cx, c, ds](const Tuple& t) { return cx.d(c(t)) - ds(t); };
}

FormalCochain formal_tot_to_cech(const FormalComplex& cx, FormalCochain c) {
  return [cx, c](const Tuple& t) {
    int q = static_cast<int>(t.size()) - 1;
    FormalSection in = c(t);
    FormalSection out;
    for (const auto& [sym, v] : in.terms()) out.add(sym, tot_sign(q + cx.degree(sym.gen)) > 0 ? v : -v);
    return out;
  };
}

// ---------------------------------------------------------------- cochains

HoloForm delta_at(const Cover& cover, const CechCochain& c, const Tuple& t) {
  HoloForm s(cover.anchor_chart(t));
  for (std::size_t j = 0; j < t.size(); ++j) {
    Tuple f = face(t, j);
    auto it = c.components().find(f);
    if (it == c.components().end()) continue;
    HoloForm r = cover.restrict(it->second, f, t);
    if (j % 2 == 0) {
      s += r;
    } else {
      s -= r;
    }
  }
  return s;
}

UPolyForm delta_at(const Cover& cover, const UPolyCochain& c, const Tuple& t) {
  UPolyForm s;
  for (std::size_t j = 0; j < t.size(); ++j) {
    Tuple f = face(t, j);
    auto it = c.components().find(f);
    if (it == c.components().end()) continue;
    UPolyForm r = restrict(cover, it->second, f, t);
    if (j % 2 == 0) {
      s += r;
    } else {
      s -= r;
    }
  }
  return s;
}

CechCochain cech_delta(const Cover& cover, const CechCochain& c, int max_level) {
  CechCochain out;
  for (const auto& t : cover.tuples_up_to(max_level)) {
    if (t.size() >= 2) out.set(t, delta_at(cover, c, t));
  }
  return out;
}

UPolyCochain cech_delta(const Cover& cover, const UPolyCochain& c, int max_level) {
  UPolyCochain out;
  for (const auto& t : cover.tuples_up_to(max_level)) {
    if (t.size() >= 2) out.set(t, delta_at(cover, c, t));
  }
  return out;
}

UPolyCochain u_truncate(const CechCochain& c, int upow) {
  UPolyCochain out;
  for (const auto& [t, w] : c.components()) out.set(t, UPolyForm::monomial(upow, w));
  return out;
}

CheckReport validate_chain_map(const Cover& cover, const ChainMapTable& table, int n, int max_level) {
  CheckReport r;
  r.name = "chain map";
  std::vector<Tuple> tuples = cover.tuples_up_to(max_level);
  for (const auto& e : all_generators(n)) {
    auto self = table.find(e);
    if (self == table.end()) {
      r.fail("no image for " + e.to_string());
      continue;
    }
    Chain<Generator> de = boundary(e);
    for (const auto& t : tuples) {
      ++r.checked;
      UPolyForm lhs;
      for (const auto& [f, sign] : de) {
        auto it = table.find(f);
        if (it == table.end()) continue;
        UPolyForm v = it->second.at(t);
        lhs += sign > 0 ? v : -v;
      }
      UPolyForm rhs = t.size() >= 2 ? delta_at(cover, self->second, t) : UPolyForm();
      if (lhs != rhs) {
        r.fail(e.to_string() + " at " + cover.tuple_to_string(t) + ": image(boundary) = " + lhs.to_string() +
               ", D(image) = " + rhs.to_string());
      }
    }
  }
  return r;
}

CheckReport check_closed(const Cover& cover, const UPolyCochain& c, int max_level) {
  CheckReport r;
  r.name = "closed";
  for (const auto& t : cover.tuples_up_to(max_level + 1)) {
    if (t.size() < 2) continue;
    ++r.checked;
    UPolyForm d = delta_at(cover, c, t);
    if (!d.is_zero()) r.fail("delta at " + cover.tuple_to_string(t) + " = " + d.to_string());
  }
  return r;
}

std::string serialize(const Cover& cover, const UPolyCochain& c) {
  std::string out;
  for (const auto& [t, v] : c.components()) {
    for (const auto& [m, w] : v.terms()) {
      out += cover.tuple_to_string(t) + " | u^" + std::to_string(m) + " | " + w.to_string() + "\n";
    }
  }
  return out;
}

UPolyCochain parse_upoly_cochain(const Cover& cover, const std::string& text) {
  UPolyCochain out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == '@') continue;
    auto p1 = line.find(" | ");
    auto p2 = line.find(" | ", p1 == std::string::npos ? 0 : p1 + 3);
    if (p1 == std::string::npos || p2 == std::string::npos) throw std::invalid_argument("bad cochain line: " + line);
    Tuple t = cover.parse_tuple(line.substr(0, p1));
    std::string u = line.substr(p1 + 3, p2 - p1 - 3);
    if (u.rfind("u^", 0) != 0) throw std::invalid_argument("bad u-power: " + line);
    int m = std::stoi(u.substr(2));
    HoloForm w = parse_form(line.substr(p2 + 3), cover.anchor_chart(t));
    UPolyForm v = out.at(t);
    v.add(m, w);
    out.set(t, v);
  }
  return out;
}

}  // namespace holochern
