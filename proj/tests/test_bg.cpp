#include <gtest/gtest.h>

#include <random>

#include "holochern/bg.hpp"
#include "holochern/parser.hpp"
#include "test_support.hpp"

using namespace holochern;
using holochern::testing::random_path_data;
using holochern::testing::scaling_cover;

namespace {

RFMatrix scalar(const RationalFunction& f) {
  RFMatrix m = RFMatrix::identity(1);
  m(0, 0) = f;
  return m;
}

Generator gen(std::vector<int> indices, int n) { return Generator{std::move(indices), n}; }

RationalFunction var(const std::string& v) { return RationalFunction::variable(v); }

// C* covered twice, w = z.
Cover cstar2() {
  Cover c = Cover::complete({make_chart("U0", {"z"}), make_chart("U1", {"w"})});
  c.add_change_map(0, 1, {var("z")});
  return c;
}

Cover cp1() {
  Cover c = Cover::complete({make_chart("U0", {"z"}), make_chart("U1", {"w"})});
  c.add_change_map(0, 1, {parse_expr("1/z", {"z"})});
  return c;
}

BGMapData line_path(int k0, int k1, int m) {
  BGMapData h(cstar2(), 1, 1);
  h.set_transition(0, 0, 1, scalar(var("z").pow(k0)));
  h.set_transition(1, 0, 1, scalar(var("z").pow(k1)));
  h.set_intertwiner(1, 0, scalar(var("z").pow(m)));
  h.set_intertwiner(1, 1, scalar(var("w").pow(m + k0 - k1)));
  return h;
}

BGMapData from_path(const BundlePathData& d) {
  BGMapData h(d.cover(), d.level(0).rank(), d.n());
  for (int p = 0; p <= d.n(); ++p) {
    for (const auto& t : d.cover().tuples(1)) {
      if (t[0] < t[1]) h.set_transition(p, t[0], t[1], d.level(p).g(t[0], t[1]));
    }
  }
  for (int p = 1; p <= d.n(); ++p) {
    for (int i = 0; i < d.cover().base_size(); ++i) h.set_intertwiner(p, i, d.intertwiner(p, i));
  }
  return h;
}

EquivariantBundleData z2_on_cstar(const std::string& a) {
  Cover c = Cover::complete({make_chart("C*", {"z"})});
  EquivariantBundleData d(c, FiniteGroup::cyclic(2), 1);
  d.set_action(1, 0, RationalMap{c.chart(0), c.chart(0), {parse_expr("1/z", {"z"})}});
  d.set_lift(1, 0, RFMatrix::identity(1));
  ConnectionMatrix conn(c.chart(0), 1, 1);
  conn(0, 0) = parse_form(a, c.chart(0));
  d.set_connection(0, conn);
  return d;
}

}  // namespace

TEST(FiniteGroup, Validation) {
  EXPECT_TRUE(FiniteGroup::cyclic(3).validate().ok);
  EXPECT_EQ(FiniteGroup::cyclic(4).inverse(1), 3);
  FiniteGroup bad({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});
  EXPECT_FALSE(bad.validate().ok);
}

TEST(UniversalChern, Examples) {
  EXPECT_EQ(universal_chern(0, 3), HoloForm::function(universal_chart(0, 3), 3));
  ChartPtr u1 = universal_chart(1, 1);
  EXPECT_EQ(universal_chern(1, 1), parse_form("[-1/g1_00] dg1_00", u1));

  ChartPtr u2 = universal_chart(1, 2);
  RFMatrix g = universal_matrix(u2, 1, 2);
  HoloForm other = trace_form(MatrixForm::from_matrix(u2, g.inverse()) * partial_d(MatrixForm::from_matrix(u2, g)));
  EXPECT_TRUE((universal_chern(1, 2) + other).is_zero());
  EXPECT_FALSE(other.is_zero());
}

TEST(UniversalChern, PullbackMatchesGamma) {
  std::mt19937 rng(417);
  for (std::size_t rank = 1; rank <= 2; ++rank) {
    Cover c = scaling_cover(rng, 3, 2);
    BundlePathData d = random_path_data(rng, c, rank, 0, false, 1);
    CocycleProvider h = lifted_cocycle(d, c.lifted(0));
    CechCochain g = gamma(c, h, 2);
    for (const auto& t : c.tuples_up_to(2)) {
      const int l = static_cast<int>(t.size()) - 1;
      const int a = c.anchor(t);
      ChartPtr u = universal_chart(l, static_cast<int>(rank));
      RationalMap sub{c.chart(a), u, {}};
      for (int m = 1; m <= l; ++m) {
        RFMatrix gm = h(t[m - 1], t[m], a);
        for (std::size_t r = 0; r < rank; ++r) {
          for (std::size_t s = 0; s < rank; ++s) sub.components.push_back(gm(r, s));
        }
      }
      HoloForm pulled = Pullback(sub)(universal_chern(l, static_cast<int>(rank)));
      if (l == 0) {
        EXPECT_EQ(pulled, HoloForm::function(c.chart(a), static_cast<long>(rank)));
      } else {
        EXPECT_EQ(pulled, g.at(t)) << c.tuple_to_string(t);
      }
    }
  }
}

TEST(Gamma, Examples) {
  Cover c = cstar2();
  for (int k = -2; k <= 2; ++k) {
    BundleVertexData v(c, 1);
    v.set_transition(1, 0, scalar(var("z").pow(k)));
    BundlePathData d({v});
    CechCochain g = gamma(c, lifted_cocycle(d, c.lifted(0)), 1);
    EXPECT_EQ(g.at({0}), HoloForm::function(c.chart(0), 1));
    EXPECT_EQ(g.at({0, 1}), parse_form("[" + std::to_string(k) + "/z] dz", c.chart(0)));
    EXPECT_EQ(g.at({1, 0}), parse_form("[" + std::to_string(-k) + "/z] dz", c.chart(0)));
  }
}

TEST(Gamma, ClosedOnRandomRankTwo) {
  std::mt19937 rng(418);
  for (int trial = 0; trial < 6; ++trial) {
    Cover c = scaling_cover(rng, 2 + trial % 3, 2);
    BundlePathData d = random_path_data(rng, c, 2, 0, false, 1);
    CechCochain g = gamma(c, lifted_cocycle(d, c.lifted(0)), c.base_size() - 1);
    EXPECT_TRUE(cech_delta(c, g, c.base_size() - 1).is_zero());
  }
}

TEST(Gamma, ClosedOnLiftedCover) {
  std::mt19937 rng(419);
  Cover c = scaling_cover(rng, 2, 2);
  BundlePathData d = random_path_data(rng, c, 1, 2, false, 1);
  Cover lifted = c.lifted(2);
  CechCochain g = gamma(lifted, lifted_cocycle(d, lifted), 3);
  EXPECT_TRUE(cech_delta(lifted, g, 3).is_zero());
}

TEST(Iota, ConstantRanksAndVertexSlice) {
  Cover lifted = cstar2().lifted(1);
  CechCochain c;
  for (int x = 0; x < lifted.size(); ++x) c.set({x}, HoloForm::function(lifted.chart(x), 2));
  ChainMapTable t = iota(lifted, c, 1);
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(t[gen({0}, 1)].at({i}), UPolyForm::monomial(0, HoloForm::function(lifted.chart(i), 2)));
    EXPECT_EQ(t[gen({1}, 1)].at({i}), UPolyForm::monomial(0, HoloForm::function(lifted.chart(i), 2)));
  }
  EXPECT_TRUE(t[gen({0, 1}, 1)].is_zero());
  EXPECT_TRUE(validate_chain_map(lifted.lifted(0), t, 1, 1).ok);

  // e_j is the level-j slice of c times u^{|c|/2}.
  BGMapData h = line_path(2, -1, 1);
  CechCochain g = gamma(h, 2);
  ChainMapTable tg = iota(lifted, g, 1);
  EXPECT_EQ(tg[gen({1}, 1)].at({0, 1}), UPolyForm::monomial(1, g.at({2, 3})));
}

TEST(Iota, ChainMapOnGammaAndNegativeControl) {
  std::mt19937 rng(420);
  for (int n = 1; n <= 2; ++n) {
    Cover c = scaling_cover(rng, 3, 2);
    BundlePathData d = random_path_data(rng, c, 1, n, false, 1);
    Cover lifted = c.lifted(n);
    CechCochain g = gamma(lifted, lifted_cocycle(d, lifted), 2 + n);
    ChainMapTable t = iota(lifted, g, 2);
    CheckReport r = validate_chain_map(c, t, n, 1);
    EXPECT_TRUE(r.ok) << r.witnesses[0];

    CechCochain broken = g;
    broken.set({0, 1}, g.at({0, 1}) + parse_form("[1] dx0", c.chart(0)));
    EXPECT_FALSE(validate_chain_map(c, iota(lifted, broken, 2), n, 1).ok);
  }
}

TEST(Square, LineBundleVertex) {
  for (int k = -3; k <= 3; ++k) {
    BGMapData h(cp1(), 1, 0);
    h.set_transition(0, 0, 1, scalar(var("z").pow(k)));
    ASSERT_TRUE(validate_bg_data(h).ok);
    CheckReport r = verify_square(h, 1);
    EXPECT_TRUE(r.ok) << r.witnesses[0];
    EXPECT_EQ(r.checked, 4);
  }
}

TEST(Square, CStarOneSimplex) {
  for (int k0 = -2; k0 <= 2; ++k0) {
    for (int k1 = -2; k1 <= 2; k1 += 2) {
      BGMapData h = line_path(k0, k1, 1);
      ASSERT_TRUE(validate_bg_data(h).ok);
      CheckReport r = verify_square(h, 1);
      EXPECT_TRUE(r.ok) << r.witnesses[0];
    }
  }
  // On a one-dimensional chart the intertwining enters only through
  // 2-forms, so a broken intertwiner is invisible to the square here.
  BGMapData bad = line_path(1, 0, 1);
  bad.set_intertwiner(1, 1, scalar(var("w").pow(5)));
  EXPECT_FALSE(validate_bg_data(bad).ok);
}

TEST(Square, PerturbedIntertwinerIsLocated) {
  std::mt19937 rng(422);
  Cover c = scaling_cover(rng, 2, 2);
  BundlePathData d = random_path_data(rng, c, 2, 1, false, 1);
  BGMapData h = from_path(d);
  ASSERT_TRUE(verify_square(h, 1).ok);
  RFMatrix skew = RFMatrix::identity(2);
  skew(0, 1) = var("x1");
  h.set_intertwiner(1, 1, d.intertwiner(1, 1) * skew);
  EXPECT_FALSE(validate_bg_data(h).ok);
  CheckReport r = verify_square(h, 1);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(r.witnesses[0].find("e(0,1) at (0,1)"), std::string::npos) << r.witnesses[0];
}

TEST(Square, IdentityAndRandomData) {
  BGMapData id(cstar2(), 2, 1);
  for (int p = 0; p <= 1; ++p) id.set_transition(p, 0, 1, RFMatrix::identity(2));
  for (int i = 0; i < 2; ++i) id.set_intertwiner(1, i, RFMatrix::identity(2));
  EXPECT_TRUE(verify_square(id, 1).ok);
  BundlePathData b = beta(id);
  EXPECT_TRUE(tot_ch_simplex(b, gen({0, 1}, 1), 1).is_zero());
  EXPECT_EQ(tot_ch_vertex(b.level(0), 1).components().size(), 2u);

  std::mt19937 rng(421);
  for (int n = 1; n <= 2; ++n) {
    Cover c = scaling_cover(rng, 3, 2);
    BGMapData h = from_path(random_path_data(rng, c, 3 - n, n, false, 1));
    ASSERT_TRUE(validate_bg_data(h).ok);
    CheckReport r = verify_square(h, 2);
    EXPECT_TRUE(r.ok) << r.witnesses[0];
  }
}

TEST(Equivariant, InvariantConnection) {
  EquivariantReport r = equivariant_check(z2_on_cstar("[z^(-2) - 1] dz"));
  EXPECT_TRUE(r.laws.ok);
  EXPECT_TRUE(r.invariant);
  EXPECT_TRUE(r.vanishing.ok);
  EXPECT_TRUE(r.nonzero_words.empty());
  EXPECT_EQ(r.vanishing.checked, 6);
}

TEST(Equivariant, ControlConnection) {
  EquivariantBundleData d = z2_on_cstar("[1] dz");
  EquivariantReport r = equivariant_check(d);
  EXPECT_TRUE(r.laws.ok);
  EXPECT_FALSE(r.invariant);
  EXPECT_EQ(nabla_phi(d, 1, 0)(0, 0), parse_form("[-z^(-2) - 1] dz", d.cover().chart(0)));
  ASSERT_FALSE(r.invariance.witnesses.empty());
  EXPECT_FALSE(r.nonzero_words.empty());
}

TEST(Equivariant, TrivialGroupAndLaws) {
  Cover c = Cover::complete({make_chart("C*", {"z"})});
  EquivariantBundleData triv(c, FiniteGroup::cyclic(1), 2);
  ConnectionMatrix a(c.chart(0), 2, 2);
  a(0, 1) = parse_form("[z] dz", c.chart(0));
  triv.set_connection(0, a);
  EXPECT_TRUE(equivariant_check(triv).invariant);

  EquivariantBundleData bad = z2_on_cstar("[1] dz");
  bad.set_lift(1, 0, scalar(var("z")));  // phi_s (rho_s^* phi_s) = z / z = 1 holds
  EXPECT_TRUE(validate_equivariant_data(bad).ok);
  bad.set_lift(1, 0, scalar(RationalFunction(2)));
  EXPECT_FALSE(validate_equivariant_data(bad).ok);
  const ChartPtr& cz = bad.cover().chart(0);
  bad.set_action(1, 0, RationalMap{cz, cz, {parse_expr("2*z", {"z"})}});
  EXPECT_FALSE(equivariant_check(bad).laws.ok);
}
