#pragma once

#include <utility>
#include <vector>

#include "holochern/cech.hpp"
#include "holochern/report.hpp"

namespace holochern {

// Nondecreasing 0 <= s_1 <= ... <= s_k <= q.
using StepPosition = std::vector<int>;

// All C(q + k, k) step positions in lexicographic order.
std::vector<StepPosition> step_positions(int k, int q);
int step_sign(const StepPosition& s);

// Entries (i, m): the base index i on level m.
using LiftedTuple = std::vector<std::pair<int, int>>;

// Level m occupies positions s_m + m ... s_{m+1} + m (s_0 = 0, s_{k+1} = q).
LiftedTuple lift_tuple(const std::vector<int>& base, const StepPosition& s);
// Inverse of lift_tuple on its image; throws std::invalid_argument otherwise.
StepPosition recover_steps(const LiftedTuple& t);

// Cover indices of the lift, level m placed on level levels[m] of the cover
// (levels[m] = m when empty).
Tuple lifted_indices(const Cover& lifted, const Tuple& base, const StepPosition& s,
                     const std::vector<int>& levels = {});

CheckReport verify_bijection(int q, int k);

// (int mu)_{i0..iq} = sum over J_k of (-1)^{s_1+...+s_k} mu_{lift}. `lifted`
// is the cover carrying mu; the result lives on its base tuples.
FormalCochain integrate_fiber(const Cover& lifted, FormalCochain mu, int k, std::vector<int> levels = {});

template <class V>
V integrate_fiber_at(const Cover& lifted, const Cochain<V>& mu, const Tuple& base, int k,
                     const std::vector<int>& levels = {}) {
  V sum;
  for (const auto& s : step_positions(k, static_cast<int>(base.size()) - 1)) {
    V v = mu.at(lifted_indices(lifted, base, s, levels));
    if (step_sign(s) > 0) {
      sum += v;
    } else {
      sum -= v;
    }
  }
  return sum;
}

template <class V>
Cochain<V> integrate_fiber(const Cover& lifted, const Cochain<V>& mu, int k, int max_level,
                           const std::vector<int>& levels = {}) {
  Cochain<V> out;
  Cover base = lifted.lifted(0);
  for (const auto& t : base.tuples_up_to(max_level)) out.set(t, integrate_fiber_at(lifted, mu, t, k, levels));
  return out;
}

// Forgets level j of U^[k]: the cochain on U^[k-1] reading mu on levels != j.
FormalCochain forget_level(const Cover& lifted, FormalCochain mu, int j);

// Checks d_A(int mu) = int d_A(mu) and
// int delta(mu) = (-1)^k delta(int mu) + sum_j (-1)^j int_{k-1} forget_j(mu)
// on all base tuples of levels <= max_q.
CheckReport verify_integration_identities(const FormalComplex& cx, const Cover& lifted, FormalCochain mu, int k,
                                          int max_q);

}  // namespace holochern
