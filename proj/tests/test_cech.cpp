#include <gtest/gtest.h>

#include <random>

#include "holochern/cech.hpp"
#include "holochern/parser.hpp"
#include "test_support.hpp"

using namespace holochern;
using holochern::testing::random_cochain;
using holochern::testing::scaling_cover;

namespace {

Cover cp1_like(int charts) {
  std::vector<ChartPtr> cs{make_chart("U0", {"z"})};
  for (int i = 1; i < charts; ++i) cs.push_back(make_chart("U" + std::to_string(i), {"w" + std::to_string(i)}));
  Cover c = Cover::complete(cs);
  for (int i = 1; i < charts; ++i) c.add_change_map(0, i, {parse_expr("1/z", {"z"})});
  for (int i = 1; i < charts; ++i) {
    for (int j = i + 1; j < charts; ++j) c.add_change_map(i, j, {RationalFunction::variable("w" + std::to_string(i))});
  }
  return c;
}

Cover formal_cover(int n) {
  std::vector<ChartPtr> cs;
  for (int i = 0; i < n; ++i) cs.push_back(make_chart("P" + std::to_string(i), {}));
  return Cover::complete(cs);
}

}  // namespace

TEST(Cover, DeclaredTuplesAndValidation) {
  std::vector<ChartPtr> cs{make_chart("A", {"z"}), make_chart("B", {"w"}), make_chart("C", {"v"})};
  Cover c(cs, {{0, 1}, {1, 2}});
  EXPECT_TRUE(c.declared({1, 0}));
  EXPECT_TRUE(c.declared({2, 1}));
  EXPECT_FALSE(c.declared({0, 2}));
  EXPECT_FALSE(c.declared({0, 0}));
  EXPECT_EQ(c.tuples(1).size(), 4u);
  EXPECT_FALSE(c.validate().ok);
  c.add_change_map(0, 1, {parse_expr("1/z", {"z"})});
  c.add_change_map(1, 2, {parse_expr("w + 1", {"w"})});
  EXPECT_TRUE(c.validate().ok);
  EXPECT_THROW(c.change_map(2, 0), MissingChangeMap);
  // Composition through chart 1.
  EXPECT_EQ(c.change_map(0, 2).components[0], parse_expr("1/z + 1", {"z"}));

  Cover bad = Cover::complete(cs);
  bad.add_change_map(0, 1, {parse_expr("1/z", {"z"})});
  bad.add_change_map(1, 2, {parse_expr("2*w", {"w"})});
  bad.add_change_map(0, 2, {parse_expr("1/z", {"z"})});
  CheckReport r = bad.validate();
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(r.witnesses[0].find("(0,1,2)"), std::string::npos);
}

TEST(Cover, LiftedIndices) {
  Cover c = cp1_like(2).lifted(2);
  EXPECT_EQ(c.size(), 6);
  EXPECT_TRUE(c.declared({0, 2, 4}));  // 0^(0), 0^(1), 0^(2)
  EXPECT_TRUE(c.declared({0, 3}));
  EXPECT_EQ(c.anchor({3, 4}), 0);
  EXPECT_EQ(c.tuple_to_string({1, 2}), "(1^(0),0^(1))");
  EXPECT_EQ(c.parse_tuple("(1^(0),0^(1))"), (Tuple{1, 2}));
}

TEST(Restrict, SpecExamples) {
  Cover c = cp1_like(4);
  HoloForm dw = HoloForm::differential(c.chart(1), 0);
  // Same anchor: unchanged.
  EXPECT_EQ(c.restrict(dw, {1, 2}, {1, 2, 3}), dw);
  // Anchor changes from chart 1 to chart 0 along w = 1/z.
  EXPECT_EQ(c.restrict(dw, {1, 2}, {0, 1, 2}), parse_form("[-1 / z^2] dz", c.chart(0)));
}

TEST(Restrict, Functorial) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    Cover c = scaling_cover(rng, 4, 2);
    for (const auto& t : c.tuples(3)) {
      // towers t2 subset t1 subset t of lengths 1..4
      for (std::size_t j = 0; j < t.size(); ++j) {
        Tuple t1 = face(t, j);
        for (std::size_t k = 0; k < t1.size(); ++k) {
          Tuple t2 = face(t1, k);
          HoloForm w = holochern::testing::random_laurent_form(rng, c.anchor_chart(t2), 2, 1, 1);
          EXPECT_EQ(c.restrict(c.restrict(w, t2, t1), t1, t), c.restrict(w, t2, t));
        }
      }
    }
  }
}

TEST(Delta, SpecExamples) {
  Cover c = cp1_like(3);
  CechCochain ones;
  for (const auto& t : c.tuples(0)) ones.set(t, HoloForm::function(c.anchor_chart(t), 1));
  EXPECT_TRUE(cech_delta(c, ones, 2).is_zero());

  FormalComplex cx;
  int x = cx.add_generator(0);
  FormalCochain single = [x](const Tuple& t) {
    FormalSection s;
    if (t == Tuple{0}) s.add({x, {0}}, 1);
    return s;
  };
  FormalCochain d = formal_delta(single);
  FormalSection expected;
  expected.add({x, {0}}, -1);
  EXPECT_EQ(d({0, 1}), expected);
  EXPECT_EQ(d({1, 0}), expected.scaled(-1));
  EXPECT_TRUE(d({1, 2}).is_zero());
}

TEST(Delta, SquareZeroFormal) {
  std::mt19937 rng(3);
  for (int n = 1; n <= 4; ++n) {
    Cover c = formal_cover(n);
    FormalComplex cx = FormalComplex::random(rng, 3, 2, false);
    for (int deg = 0; deg <= 3; ++deg) {
      FormalCochain mu = random_formal_cochain(cx, deg, rng());
      FormalCochain dd = formal_delta(formal_delta(mu));
      for (const auto& t : c.tuples_up_to(n - 1)) EXPECT_TRUE(dd(t).is_zero());
    }
  }
}

TEST(Delta, SquareZeroForms) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    Cover c = scaling_cover(rng, 4, 2);
    for (int k = 0; k <= 2; ++k) {
      CechCochain mu = random_cochain(rng, c, 0, 1, k);
      CechCochain d1 = cech_delta(c, mu, 2);
      CechCochain d2 = cech_delta(c, d1, 3);
      // Levels 2..3 of delta^2 only see levels 0..1 of mu.
      for (const auto& [t, w] : d2.components()) {
        EXPECT_TRUE(t.size() < 3 || w.is_zero()) << c.tuple_to_string(t) << " " << w.to_string();
      }
    }
  }
}

TEST(TotalDifferential, SignRuleAndSquareZero) {
  FormalComplex cx;
  int x = cx.add_generator(1);
  int y = cx.add_generator(2);
  cx.set_differential(x, {{y, GaussianRational(1)}});
  FormalCochain c = [x](const Tuple& t) {
    FormalSection s;
    if (t.size() == 1) s.add({x, t}, 1);
    return s;
  };
  // |x| = 1 on 0-tuples: D(x) = delta x + d_A x.
  FormalCochain dc = formal_total_differential(cx, c);
  FormalCochain expected = [&](const Tuple& t) { return formal_delta(c)(t) + cx.d(c(t)); };
  for (const auto& t : formal_cover(3).tuples_up_to(2)) EXPECT_EQ(dc(t), expected(t));

  std::mt19937 rng(9);
  Cover cov = formal_cover(4);
  for (int trial = 0; trial < 5; ++trial) {
    FormalComplex r = FormalComplex::random(rng, 4, 4, true);
    for (int deg = 0; deg <= 4; ++deg) {
      FormalCochain mu = random_formal_cochain(r, deg, rng());
      FormalCochain dd = formal_total_differential(r, formal_total_differential(r, mu));
      FormalCochain tt = formal_tot_differential(r, formal_tot_differential(r, mu));
      for (const auto& t : cov.tuples_up_to(3)) {
        EXPECT_TRUE(dd(t).is_zero());
        EXPECT_TRUE(tt(t).is_zero());
      }
    }
  }
}

TEST(TotToCech, SignsAndIntertwining) {
  EXPECT_EQ(tot_sign(0), 1);
  EXPECT_EQ(tot_sign(1), -1);
  EXPECT_EQ(tot_sign(2), -1);
  EXPECT_EQ(tot_sign(3), 1);
  EXPECT_EQ(tot_sign(-1), 1);
  EXPECT_EQ(tot_sign(-2), -1);
  std::mt19937 rng(13);
  Cover cov = formal_cover(4);
  for (int trial = 0; trial < 4; ++trial) {
    FormalComplex cx = FormalComplex::random(rng, 4, 4, true);
    for (int deg = 0; deg <= 4; ++deg) {
      FormalCochain mu = random_formal_cochain(cx, deg, rng());
      FormalCochain lhs = formal_total_differential(cx, formal_tot_to_cech(cx, mu));
      FormalCochain rhs = formal_tot_to_cech(cx, formal_tot_differential(cx, mu));
      for (const auto& t : cov.tuples_up_to(3)) EXPECT_EQ(lhs(t), rhs(t));
    }
  }
}

TEST(UTruncate, SpecExamples) {
  ChartPtr c = make_chart("V", {"a", "b", "c"});
  HoloForm w2 = parse_form("[1] da^db", c);
  HoloForm w3 = parse_form("[1] da^db^dc", c);
  HoloForm w0 = parse_form("[5]", c);
  EXPECT_FALSE(UPolyForm::monomial(1, w2).is_zero());
  EXPECT_TRUE(UPolyForm::monomial(1, w3).is_zero());
  EXPECT_FALSE(UPolyForm::monomial(0, w0).is_zero());
  CechCochain cc;
  cc.set({0}, w3);
  EXPECT_TRUE(u_truncate(cc, 1).is_zero());
}

TEST(ChainMap, ConstantTableAndNegativeControl) {
  Cover c = cp1_like(3);
  ChainMapTable table;
  for (const auto& e : all_generators(2)) {
    UPolyCochain img;
    if (e.dim() == 0) {
      for (const auto& t : c.tuples(0)) img.set(t, UPolyForm::monomial(0, HoloForm::function(c.anchor_chart(t), 2)));
    }
    table[e] = img;
  }
  CheckReport ok = validate_chain_map(c, table, 2, 2);
  EXPECT_TRUE(ok.ok);
  // Change the image of one vertex: boundary of e(0,1) no longer matches.
  ChainMapTable bad = table;
  Generator v1{{1}, 2};
  bad[v1] = UPolyCochain();
  for (const auto& t : c.tuples(0)) bad[v1].set(t, UPolyForm::monomial(0, HoloForm::function(c.anchor_chart(t), -2)));
  CheckReport r = validate_chain_map(c, bad, 2, 2);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(r.witnesses[0].find("e(0,1)"), std::string::npos) << r.witnesses[0];
}

TEST(Serialization, RoundTrip) {
  std::mt19937 rng(17);
  Cover c = scaling_cover(rng, 3, 2);
  UPolyCochain u;
  for (const auto& t : c.tuples_up_to(2)) {
    UPolyForm v;
    for (int m = 0; m <= 2; ++m) v.add(m, holochern::testing::random_laurent_form(rng, c.anchor_chart(t), 2));
    u.set(t, v);
  }
  std::string text = serialize(c, u);
  EXPECT_EQ(parse_upoly_cochain(c, text), u);
  EXPECT_EQ(serialize(c, parse_upoly_cochain(c, text)), text);
}
