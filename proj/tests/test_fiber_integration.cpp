#include <gtest/gtest.h>

#include <random>

#include "holochern/fiber_integration.hpp"

using namespace holochern;

namespace {

Cover formal_cover(int n) {
  std::vector<ChartPtr> cs;
  for (int i = 0; i < n; ++i) cs.push_back(make_chart("P" + std::to_string(i), {}));
  return Cover::complete(cs);
}

// mu is the indicator of single tuples, so integrals expose their terms.
FormalCochain indicator_cochain(int gen) {
  return [gen](const Tuple& t) {
    FormalSection s;
    s.add({gen, t}, 1);
    return s;
  };
}

}  // namespace

TEST(StepPositions, Examples) {
  EXPECT_EQ(step_positions(1, 1), (std::vector<StepPosition>{{0}, {1}}));
  EXPECT_EQ(step_positions(2, 0), (std::vector<StepPosition>{{0, 0}}));
  EXPECT_EQ(step_positions(3, 4).size(), 35u);
  EXPECT_EQ(step_positions(0, 3), (std::vector<StepPosition>{{}}));
  for (int k = 0; k <= 4; ++k) {
    for (int q = 0; q <= 6; ++q) {
      auto all = step_positions(k, q);
      EXPECT_EQ(static_cast<long>(all.size()), binomial(q + k, k));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    }
  }
}

TEST(LiftTuple, ExamplesAndRecovery) {
  LiftedTuple a = lift_tuple({10, 11}, {0});
  EXPECT_EQ(a, (LiftedTuple{{10, 0}, {10, 1}, {11, 1}}));
  LiftedTuple b = lift_tuple({10, 11}, {1});
  EXPECT_EQ(b, (LiftedTuple{{10, 0}, {11, 0}, {11, 1}}));

  std::vector<int> base(16);
  for (int i = 0; i < 16; ++i) base[i] = i;
  LiftedTuple fig = lift_tuple(base, {3, 7, 7, 11, 12});
  ASSERT_EQ(fig.size(), 21u);
  EXPECT_EQ(fig[10], (std::pair<int, int>{7, 3}));

  for (int k = 0; k <= 4; ++k) {
    for (int q = 0; q <= 6; ++q) {
      std::vector<int> b2(q + 1);
      for (int i = 0; i <= q; ++i) b2[i] = i;
      for (const auto& s : step_positions(k, q)) EXPECT_EQ(recover_steps(lift_tuple(b2, s)), s);
    }
  }
}

TEST(Bijection, Exhaustive) {
  for (int q = 0; q <= 5; ++q) {
    for (int k = 0; k <= 3; ++k) {
      CheckReport r = verify_bijection(q, k);
      EXPECT_TRUE(r.ok) << r.name << ": " << (r.witnesses.empty() ? "" : r.witnesses[0]);
      EXPECT_EQ(r.checked, binomial(q + k, k) * (q + k + 1));
    }
  }
  EXPECT_EQ(verify_bijection(1, 1).checked, 6);
}

TEST(Integration, Examples) {
  Cover base = formal_cover(3);
  FormalCochain mu0 = indicator_cochain(0);
  // k = 0 relabels.
  EXPECT_EQ(integrate_fiber(base.lifted(0), mu0, 0)({0, 2}), mu0({0, 2}));

  Cover l1 = base.lifted(1);
  FormalCochain i1 = integrate_fiber(l1, mu0, 1);
  FormalSection expected;
  // (0^(0), 0^(1), 1^(1)) - (0^(0), 1^(0), 1^(1)) with x = level * 3 + base
  expected.add({0, {0, 3, 4}}, 1);
  expected.add({0, {0, 1, 4}}, -1);
  EXPECT_EQ(i1({0, 1}), expected);

  FormalSection three = i1({0, 1, 2});
  ASSERT_EQ(three.terms().size(), 3u);
  EXPECT_EQ(three.terms().at({0, {0, 3, 4, 5}}), GaussianRational(1));
  EXPECT_EQ(three.terms().at({0, {0, 1, 4, 5}}), GaussianRational(-1));
  EXPECT_EQ(three.terms().at({0, {0, 1, 2, 5}}), GaussianRational(1));
}

TEST(Integration, Identities) {
  std::mt19937 rng(21);
  Cover base = formal_cover(5);
  for (int k = 0; k <= 3; ++k) {
    Cover lifted = base.lifted(k);
    for (int trial = 0; trial < 2; ++trial) {
      FormalComplex cx = FormalComplex::random(rng, 3, 4, true);
      for (int deg = k; deg <= k + 4; ++deg) {
        FormalCochain mu = random_formal_cochain(cx, deg, rng());
        CheckReport r = verify_integration_identities(cx, lifted, mu, k, 4);
        EXPECT_TRUE(r.ok) << r.name << ": " << (r.witnesses.empty() ? "" : r.witnesses[0]);
      }
    }
  }
}

TEST(Integration, IdentityDetectsWrongSign) {
  // Dropping the forgetful terms breaks the identity for k >= 1.
  Cover base = formal_cover(3);
  Cover lifted = base.lifted(1);
  FormalCochain mu = indicator_cochain(0);
  FormalCochain lhs = integrate_fiber(lifted, formal_delta(mu), 1);
  FormalCochain rhs = formal_delta(integrate_fiber(lifted, mu, 1));
  bool differs = false;
  for (const auto& t : base.tuples_up_to(2)) differs = differs || lhs(t) != -rhs(t);
  EXPECT_TRUE(differs);
}
