#include "holochern/forms.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "holochern/parser.hpp"

namespace holochern {

ChartPtr make_chart(std::string name, std::vector<std::string> coords) {
  std::vector<std::string> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("chart " + name + " has repeated coordinates");
  }
  return std::make_shared<const Chart>(Chart{std::move(name), std::move(coords)});
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->name == b->name && a->coords == b->coords;
}

namespace {

void check_same(ChartPtr& mine, const ChartPtr& other) {
  if (!other) return;
  if (!mine) {
    mine = other;
    return;
  }
  if (!same_chart(mine, other)) throw std::invalid_argument("forms on different charts: " + mine->name + ", " + other->name);
}

}  // namespace

HoloForm HoloForm::function(ChartPtr chart, const RationalFunction& f) {
  HoloForm w(std::move(chart));
  w.add_term({}, f);
  return w;
}

HoloForm HoloForm::differential(ChartPtr chart, int coord) {
  HoloForm w(std::move(chart));
  w.add_term({coord}, RationalFunction(1));
  return w;
}

bool HoloForm::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

int HoloForm::degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous()) throw std::logic_error("degree of a mixed-degree form");
  return static_cast<int>(terms_.begin()->first.size());
}

int HoloForm::max_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

HoloForm HoloForm::homogeneous_part(int k) const {
  HoloForm w(chart_);
  for (const auto& [idx, f] : terms_) {
    if (static_cast<int>(idx.size()) == k) w.terms_.emplace(idx, f);
  }
  return w;
}

void HoloForm::add_term(const IndexSet& idx, const RationalFunction& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

HoloForm HoloForm::operator-() const {
  HoloForm w = *this;
  for (auto& [idx, f] : w.terms_) f = -f;
  return w;
}

HoloForm& HoloForm::operator+=(const HoloForm& o) {
  check_same(chart_, o.chart_);
  for (const auto& [idx, f] : o.terms_) add_term(idx, f);
  return *this;
}

HoloForm& HoloForm::operator-=(const HoloForm& o) {
  check_same(chart_, o.chart_);
  for (const auto& [idx, f] : o.terms_) add_term(idx, -f);
  return *this;
}

HoloForm HoloForm::scaled(const RationalFunction& f) const {
  HoloForm w(chart_);
  if (f.is_zero()) return w;
  for (const auto& [idx, g] : terms_) w.terms_.emplace(idx, g * f);
  return w;
}

bool operator==(const HoloForm& a, const HoloForm& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!same_chart(a.chart_, b.chart_)) return false;
  return a.terms_ == b.terms_;
}

std::string HoloForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [idx, f] : terms_) {
    if (!s.empty()) s += " + ";
    s += "[" + f.to_string() + "]";
    if (!idx.empty()) {
      s += " ";
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += "^";
        s += "d" + chart_->coords[static_cast<std::size_t>(idx[k])];
      }
    }
  }
  return s;
}

HoloForm wedge(const HoloForm& a, const HoloForm& b) {
  ChartPtr chart = a.chart();
  check_same(chart, b.chart());
  HoloForm w(chart);
  for (const auto& [i, f] : a.terms()) {
    for (const auto& [j, g] : b.terms()) {
      IndexSet merged;
      merged.reserve(i.size() + j.size());
      int inversions = 0;
      bool clash = false;
      std::size_t x = 0, y = 0;
      while (x < i.size() || y < j.size()) {
        if (y == j.size() || (x < i.size() && i[x] < j[y])) {
          merged.push_back(i[x++]);
        } else if (x == i.size() || j[y] < i[x]) {
          // j[y] passes the remaining entries of i.
          inversions += static_cast<int>(i.size() - x);
          merged.push_back(j[y++]);
        } else {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      RationalFunction c = f * g;
      w.add_term(merged, inversions % 2 == 0 ? c : -c);
    }
  }
  return w;
}

HoloForm partial_d(const HoloForm& w) {
  HoloForm out(w.chart());
  if (w.is_zero()) return out;
  const auto& coords = w.chart()->coords;
  for (const auto& [idx, f] : w.terms()) {
    if (f.is_constant()) continue;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      const int jj = static_cast<int>(j);
      if (std::binary_search(idx.begin(), idx.end(), jj)) continue;
      RationalFunction df = f.derivative(coords[j]);
      if (df.is_zero()) continue;
      IndexSet merged = idx;
      auto pos = std::lower_bound(merged.begin(), merged.end(), jj);
      const long before = pos - merged.begin();
      merged.insert(pos, jj);
      out.add_term(merged, before % 2 == 0 ? df : -df);
    }
  }
  return out;
}

HoloForm parse_form(const std::string& text, const ChartPtr& chart) {
  HoloForm w(chart);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.compare(pos, std::string::npos, "0") == 0) return w;
  while (true) {
    skip();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '[' in form", pos);
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos) throw ParseError("unterminated '[' in form", pos);
    RationalFunction f;
    try {
      f = parse_expr(text.substr(pos + 1, close - pos - 1), chart->coords);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in form coefficient: ") + e.what(), pos + 1 + e.position());
    }
    pos = close + 1;
    skip();
    IndexSet idx;
    if (pos < text.size() && text[pos] == 'd') {
      std::size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != '+') ++end;
      std::string basis = text.substr(pos, end - pos);
      std::size_t start = 0;
      while (start <= basis.size()) {
        std::size_t hat = basis.find('^', start);
        std::string piece = basis.substr(start, hat == std::string::npos ? std::string::npos : hat - start);
        if (piece.size() < 2 || piece[0] != 'd') throw ParseError("bad basis form '" + piece + "'", pos + start);
        auto it = std::find(chart->coords.begin(), chart->coords.end(), piece.substr(1));
        if (it == chart->coords.end()) throw ParseError("unknown coordinate in '" + piece + "'", pos + start);
        idx.push_back(static_cast<int>(it - chart->coords.begin()));
        if (hat == std::string::npos) break;
        start = hat + 1;
      }
      pos = end;
    }
    IndexSet sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != idx || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("basis form not in canonical order", pos);
    }
    w.add_term(idx, f);
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw ParseError("expected '+' between form terms", pos);
    ++pos;
  }
  return w;
}

RationalMap identity_map(const ChartPtr& chart) {
  RationalMap m{chart, chart, {}};
  for (const auto& c : chart->coords) m.components.push_back(RationalFunction::variable(c));
  return m;
}

namespace {

std::map<std::string, RationalFunction> substitution(const RationalMap& phi) {
  std::map<std::string, RationalFunction> s;
  for (std::size_t k = 0; k < phi.target->coords.size(); ++k) s.emplace(phi.target->coords[k], phi.components[k]);
  return s;
}

}  // namespace

RationalMap compose(const RationalMap& phi, const RationalMap& psi) {
  if (!same_chart(phi.source, psi.target)) throw std::invalid_argument("compose: chart mismatch");
  RationalMap out{psi.source, phi.target, {}};
  auto s = substitution(psi);
  for (const auto& c : phi.components) out.components.push_back(c.substitute(s));
  return out;
}

bool operator==(const RationalMap& a, const RationalMap& b) {
  return same_chart(a.source, b.source) && same_chart(a.target, b.target) && a.components == b.components;
}

RationalFunction pullback(const RationalFunction& f, const RationalMap& phi) { return f.substitute(substitution(phi)); }

Pullback::Pullback(RationalMap phi) : phi_(std::move(phi)), subst_(substitution(phi_)) {
  if (phi_.components.size() != phi_.target->coords.size()) {
    throw std::invalid_argument("rational map needs one component per target coordinate");
  }
  for (const auto& c : phi_.components) d_components_.push_back(partial_d(HoloForm::function(phi_.source, c)));
}

const HoloForm& Pullback::basis(const IndexSet& idx) const {
  auto it = basis_cache_.find(idx);
  if (it != basis_cache_.end()) return it->second;
  HoloForm b = HoloForm::function(phi_.source, RationalFunction(1));
  if (!idx.empty()) {
    IndexSet rest(idx.begin(), idx.end() - 1);
    b = wedge(basis(rest), d_components_[static_cast<std::size_t>(idx.back())]);
  }
  return basis_cache_.emplace(idx, std::move(b)).first->second;
}

HoloForm Pullback::operator()(const HoloForm& w) const {
  HoloForm out(phi_.source);
  if (w.is_zero()) return out;
  if (!same_chart(w.chart(), phi_.target)) throw std::invalid_argument("pullback: form not on the target chart");
  for (const auto& [idx, f] : w.terms()) {
    RationalFunction g = f.substitute(subst_);
    if (g.is_zero()) continue;
    out += basis(idx).scaled(g);
  }
  return out;
}

HoloForm pullback(const HoloForm& w, const RationalMap& phi) { return Pullback(phi)(w); }

MatrixForm::MatrixForm(ChartPtr chart, std::size_t rows, std::size_t cols)
    : chart_(std::move(chart)), rows_(rows), cols_(cols), entries_(rows * cols, HoloForm(chart_)) {}

MatrixForm MatrixForm::from_matrix(ChartPtr chart, const RFMatrix& m) {
  MatrixForm out(chart, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = HoloForm::function(chart, m(r, c));
  }
  return out;
}

MatrixForm MatrixForm::identity(ChartPtr chart, std::size_t n) {
  return from_matrix(std::move(chart), RFMatrix::identity(n));
}

bool MatrixForm::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const HoloForm& w) { return w.is_zero(); });
}

bool MatrixForm::has_pure_degree(int k) const {
  for (const auto& e : entries_) {
    if (e.is_zero()) continue;
    if (!e.is_homogeneous() || e.degree() != k) return false;
  }
  return true;
}

RFMatrix MatrixForm::functions() const {
  RFMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const HoloForm& e = (*this)(r, c);
      if (e.is_zero()) continue;
      if (e.max_degree() != 0) throw std::logic_error("matrix entry is not a function");
      m(r, c) = e.terms().begin()->second;
    }
  }
  return m;
}

MatrixForm operator*(const MatrixForm& a, const MatrixForm& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix form product: dimension mismatch");
  ChartPtr chart = a.chart_;
  check_same(chart, b.chart_);
  MatrixForm out(chart, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      HoloForm s(chart);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const HoloForm& x = a(r, k);
        const HoloForm& y = b(k, c);
        if (x.is_zero() || y.is_zero()) continue;
        s += wedge(x, y);
      }
      out(r, c) = std::move(s);
    }
  }
  return out;
}

MatrixForm operator+(const MatrixForm& a, const MatrixForm& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix form sum: dimension mismatch");
  MatrixForm out = a;
  check_same(out.chart_, b.chart_);
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

MatrixForm operator-(const MatrixForm& a, const MatrixForm& b) { return a + (-b); }

MatrixForm MatrixForm::operator-() const {
  MatrixForm out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool operator==(const MatrixForm& a, const MatrixForm& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string MatrixForm::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ", ";
    s += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += (*this)(r, c).to_string();
    }
    s += "]";
  }
  return s + "]";
}

MatrixForm partial_d(const MatrixForm& m) {
  MatrixForm out(m.chart(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = partial_d(m(r, c));
  }
  return out;
}

MatrixForm pullback(const MatrixForm& m, const Pullback& phi) {
  MatrixForm out(phi.map().source, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = phi(m(r, c));
  }
  return out;
}

HoloForm trace_form(const MatrixForm& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace of a non-square matrix form");
  HoloForm t(m.chart());
  for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
  return t;
}

ConnectionMatrix zero_connection(const ChartPtr& chart, std::size_t rank) { return MatrixForm(chart, rank, rank); }

void validate_connection(const ConnectionMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("connection matrix must be square");
  if (!a.has_pure_degree(1)) throw std::invalid_argument("connection matrix must consist of 1-forms");
}

MatrixForm apply_connection(const MatrixForm& f, const ConnectionMatrix& a_src, const ConnectionMatrix& a_dst) {
  if (a_src.rows() != f.cols() || a_dst.rows() != f.rows()) {
    throw std::invalid_argument("apply_connection: dimension mismatch");
  }
  MatrixForm out = partial_d(f);
  if (!a_dst.is_zero()) out = out + a_dst * f;
  if (!a_src.is_zero()) out = out - f * a_src;
  return out;
}

}  // namespace holochern
