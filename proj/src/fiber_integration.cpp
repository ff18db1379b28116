#include "holochern/fiber_integration.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace holochern {

std::vector<StepPosition> step_positions(int k, int q) {
  std::vector<StepPosition> out;
  StepPosition cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= q; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  if (k >= 0 && q >= 0) rec(0);
  return out;
}

int step_sign(const StepPosition& s) {
  int sum = 0;
  for (int v : s) sum += v;
  return sum % 2 == 0 ? 1 : -1;
}

LiftedTuple lift_tuple(const std::vector<int>& base, const StepPosition& s) {
  const int q = static_cast<int>(base.size()) - 1;
  const int k = static_cast<int>(s.size());
  LiftedTuple out;
  out.reserve(base.size() + s.size());
  for (int m = 0; m <= k; ++m) {
    int from = m == 0 ? 0 : s[m - 1];
    int to = m == k ? q : s[m];
    for (int b = from; b <= to; ++b) out.emplace_back(base[b], m);
  }
  return out;
}

StepPosition recover_steps(const LiftedTuple& t) {
  StepPosition s;
  if (t.empty() || t.front().second != 0) throw std::invalid_argument("lifted tuple must start on level 0");
  for (std::size_t p = 1; p < t.size(); ++p) {
    int dl = t[p].second - t[p - 1].second;
    if (dl == 1) {
      if (t[p].first != t[p - 1].first) throw std::invalid_argument("level step must keep the base index");
      s.push_back(static_cast<int>(p) - t[p].second);
    } else if (dl != 0) {
      throw std::invalid_argument("levels must rise by at most one");
    }
  }
  return s;
}

Tuple lifted_indices(const Cover& lifted, const Tuple& base, const StepPosition& s, const std::vector<int>& levels) {
  Tuple out;
  for (const auto& [i, m] : lift_tuple(base, s)) {
    out.push_back(lifted.index(lifted.base(i), levels.empty() ? m : levels.at(m)));
  }
  return out;
}

namespace {

std::string lifted_to_string(const LiftedTuple& t) {
  std::string s = "(";
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (p) s += ",";
    s += std::to_string(t[p].first) + "^(" + std::to_string(t[p].second) + ")";
  }
  return s + ")";
}

LiftedTuple drop(const LiftedTuple& t, std::size_t p) {
  LiftedTuple out = t;
  out.erase(out.begin() + static_cast<long>(p));
  return out;
}

// Target label: ("J", r) for J_k(.. i_r hat ..); ("L", m) and ("R", m) for the
// two halves of Jhat^m.
using Label = std::pair<char, int>;
using Target = std::pair<Label, LiftedTuple>;

}  // namespace

CheckReport verify_bijection(int q, int k) {
  CheckReport r;
  r.name = "bijection q=" + std::to_string(q) + " k=" + std::to_string(k);
  std::vector<int> base(q + 1);
  for (int b = 0; b <= q; ++b) base[b] = b;

  std::vector<std::pair<LiftedTuple, StepPosition>> jk;
  for (const auto& s : step_positions(k, q)) jk.emplace_back(lift_tuple(base, s), s);
  if (static_cast<long>(jk.size()) != binomial(q + k, k)) r.fail("|J_k| differs from C(q+k,k)");

  // Targets built from their definitions.
  std::set<Target> targets;
  for (int rr = 0; rr <= q && q > 0; ++rr) {
    std::vector<int> sub;
    for (int b = 0; b <= q; ++b) {
      if (b != rr) sub.push_back(b);
    }
    for (const auto& s : step_positions(k, q - 1)) targets.insert({{'J', rr}, lift_tuple(sub, s)});
  }
  if (q == 0 && k == 0) targets.insert({{'J', 0}, {}});
  if (k > 0) {
    for (const auto& [t, s] : jk) {
      targets.insert({{'R', 0}, drop(t, s[0])});
      targets.insert({{'L', k}, drop(t, s[k - 1] + k)});
      for (int m = 1; m < k; ++m) {
        int left = s[m - 1] + m;
        int right = s[m] + m;
        targets.insert({{'L', m}, drop(t, left)});
        if (right != left) targets.insert({{'R', m}, drop(t, right)});
      }
    }
  }

  std::map<Target, std::string> hit;
  for (const auto& [t, s] : jk) {
    for (int l = 0; l <= q + k; ++l) {
      ++r.checked;
      int m = t[l].second;
      Label label;
      if (k > 0 && m >= 1 && l == s[m - 1] + m) {
        label = {'L', m};
      } else if (k > 0 && m < k && l == s[m] + m) {
        label = {'R', m};
      } else {
        label = {'J', l - m};
      }
      Target img{label, drop(t, l)};
      std::string src = lifted_to_string(t) + " without position " + std::to_string(l);
      if (!targets.count(img)) r.fail(src + " lands outside the target");
      auto [it, fresh] = hit.emplace(img, src);
      if (!fresh) r.fail("not injective: " + src + " and " + it->second);
    }
  }
  if (hit.size() != targets.size()) {
    for (const auto& t : targets) {
      if (!hit.count(t)) {
        r.fail("not surjective: " + std::string(1, t.first.first) + std::to_string(t.first.second) + " " +
               lifted_to_string(t.second));
        break;
      }
    }
  }
  return r;
}

FormalCochain integrate_fiber(const Cover& lifted, FormalCochain mu, int k, std::vector<int> levels) {
  return [lifted, mu, k, levels](const Tuple& t) {
    FormalSection sum;
    for (const auto& s : step_positions(k, static_cast<int>(t.size()) - 1)) {
      FormalSection v = mu(lifted_indices(lifted, t, s, levels));
      sum += step_sign(s) > 0 ? v : -v;
    }
    return sum;
  };
}

FormalCochain forget_level(const Cover& lifted, FormalCochain mu, int j) {
  return [lifted, mu, j](const Tuple& t) {
    Tuple up;
    for (int x : t) {
      int m = lifted.level(x);
      up.push_back(lifted.index(lifted.base(x), m < j ? m : m + 1));
    }
    return mu(up);
  };
}

CheckReport verify_integration_identities(const FormalComplex& cx, const Cover& lifted, FormalCochain mu, int k,
                                          int max_q) {
  CheckReport r;
  r.name = "integration identities k=" + std::to_string(k);
  Cover base = lifted.lifted(0);
  Cover lower = lifted.lifted(k - 1 < 0 ? 0 : k - 1);
  FormalCochain int_mu = integrate_fiber(lifted, mu, k);
  FormalCochain d_int = formal_d_internal(cx, int_mu);
  FormalCochain int_d = integrate_fiber(lifted, formal_d_internal(cx, mu), k);
  FormalCochain int_delta = integrate_fiber(lifted, formal_delta(mu), k);
  FormalCochain delta_int = formal_delta(int_mu);
  std::vector<FormalCochain> faces;
  for (int j = 0; j <= k && k > 0; ++j) faces.push_back(integrate_fiber(lower, forget_level(lifted, mu, j), k - 1));
  for (const auto& t : base.tuples_up_to(max_q)) {
    ++r.checked;
    if (d_int(t) != int_d(t)) r.fail("d_A does not commute with integration at " + base.tuple_to_string(t));
    FormalSection rhs = k % 2 == 0 ? delta_int(t) : -delta_int(t);
    for (int j = 0; j < static_cast<int>(faces.size()); ++j) rhs += j % 2 == 0 ? faces[j](t) : -faces[j](t);
    FormalSection lhs = int_delta(t);
    if (lhs != rhs) {
      r.fail("delta identity fails at " + base.tuple_to_string(t) + ": " + lhs.to_string() + " vs " +
             rhs.to_string());
    }
  }
  return r;
}

}  // namespace holochern
