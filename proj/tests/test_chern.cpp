#include <gtest/gtest.h>

#include <random>

#include "holochern/chern.hpp"
#include "holochern/parser.hpp"
#include "test_support.hpp"

using namespace holochern;
using holochern::testing::ez_pipeline;
using holochern::testing::random_connection;
using holochern::testing::random_monomial_unit_matrix;
using holochern::testing::random_path_data;
using holochern::testing::scaling_cover;

namespace {

Cover cp1() {
  Cover c = Cover::complete({make_chart("U0", {"z"}), make_chart("U1", {"w"})});
  c.add_change_map(0, 1, {parse_expr("1/z", {"z"})});
  return c;
}

// Charts U<i> with coordinate w<i> (w0 = z), all glued by the identity.
Cover cstar(int charts) {
  std::vector<ChartPtr> cs{make_chart("U0", {"z"})};
  for (int i = 1; i < charts; ++i) cs.push_back(make_chart("U" + std::to_string(i), {"w" + std::to_string(i)}));
  Cover c = Cover::complete(cs);
  for (int a = 0; a < charts; ++a) {
    for (int b = a + 1; b < charts; ++b) c.add_change_map(a, b, {RationalFunction::variable(cs[a]->coords[0])});
  }
  return c;
}

RFMatrix scalar(const RationalFunction& f) {
  RFMatrix m = RFMatrix::identity(1);
  m(0, 0) = f;
  return m;
}

RationalFunction z() { return RationalFunction::variable("z"); }

HoloForm dz_over_z(const ChartPtr& c, long n = 1) { return parse_form("[" + std::to_string(n) + "/z] dz", c); }

NerveSimplex random_simplex(std::mt19937& rng, const ChartPtr& c, std::size_t rank, int l) {
  NerveSimplex s;
  s.chart = c;
  for (int m = 0; m <= l; ++m) s.connections.push_back(random_connection(rng, c, rank));
  for (int m = 0; m < l; ++m) s.morphisms.push_back(random_monomial_unit_matrix(rng, rank, c->coords, 1, 2));
  return s;
}

BundleVertexData line_bundle(const Cover& c, long n) {
  BundleVertexData d(c, 1);
  d.set_transition(0, 1, scalar(z().pow(static_cast<int>(n))));
  return d;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_bundle_data(line_bundle(cp1(), 3)).ok);

  Cover c3 = cstar(3);
  BundleVertexData bad(c3, 1);
  bad.set_transition(0, 1, scalar(z()));
  bad.set_transition(1, 2, scalar(RationalFunction::variable("w1")));
  bad.set_transition(0, 2, scalar(z().pow(3)));
  CheckReport r = validate_bundle_data(bad);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_NE(r.witnesses[0].find("(0,1,2)"), std::string::npos);

  BundleVertexData good = bad;
  good.set_transition(0, 2, scalar(z().pow(2)));
  EXPECT_TRUE(validate_bundle_data(good).ok);

  BundleVertexData missing(c3, 1);
  missing.set_transition(0, 1, scalar(z()));
  EXPECT_FALSE(validate_bundle_data(missing).ok);

  BundlePathData path({good, good});
  for (int i = 0; i < 3; ++i) path.set_intertwiner(1, i, RFMatrix::identity(1));
  EXPECT_TRUE(validate_bundle_data(path).ok);
  path.set_intertwiner(1, 0, scalar(z()));
  CheckReport pr = validate_bundle_data(path);
  EXPECT_FALSE(pr.ok);
  EXPECT_NE(pr.witnesses[0].find("intertwining"), std::string::npos);
}

TEST(ChNerveSimplex, Examples) {
  Cover c = cstar(1);
  ChartPtr ch = c.chart(0);
  NerveSimplex v{ch, {zero_connection(ch, 3)}, {}};
  EXPECT_EQ(ch_nerve_simplex(v), UPolyForm::monomial(0, HoloForm::function(ch, 3)));

  NerveSimplex e01{ch, {zero_connection(ch, 1), zero_connection(ch, 1)}, {scalar(z())}};
  EXPECT_EQ(ch_nerve_simplex(e01), UPolyForm::monomial(1, dz_over_z(ch)));

  NerveSimplex e012{ch, {zero_connection(ch, 1), zero_connection(ch, 1), zero_connection(ch, 1)},
                    {scalar(z()), scalar(z().pow(2))}};
  EXPECT_TRUE(ch_nerve_simplex(e012).is_zero());
  EXPECT_EQ(ch_nerve_simplex(nerve_face(e012, 0)), UPolyForm::monomial(1, dz_over_z(ch, 2)));
  EXPECT_EQ(ch_nerve_simplex(nerve_face(e012, 1)), UPolyForm::monomial(1, dz_over_z(ch, 3)));
  EXPECT_EQ(ch_nerve_simplex(nerve_face(e012, 2)), UPolyForm::monomial(1, dz_over_z(ch, 1)));
  EXPECT_TRUE(verify_face_sum(e012).ok);

  // A connection enters through del f + A_dst f - f A_src.
  ConnectionMatrix a(ch, 1, 1);
  a(0, 0) = parse_form("[1] dz", ch);
  NerveSimplex e01a{ch, {zero_connection(ch, 1), a}, {scalar(z())}};
  EXPECT_EQ(ch_nerve_simplex(e01a), UPolyForm::monomial(1, parse_form("[(1 + z)/z] dz", ch)));

  NerveSimplex wrong{ch, {zero_connection(ch, 2), zero_connection(ch, 1)}, {scalar(z())}};
  EXPECT_THROW(ch_nerve_simplex(wrong), std::invalid_argument);
}

TEST(FaceSum, IdentityMorphismsVanish) {
  std::mt19937 rng(3);
  ChartPtr ch = make_chart("V", {"x", "y"});
  ConnectionMatrix a = random_connection(rng, ch, 2);
  NerveSimplex s{ch, {a, a, a, a}, {RFMatrix::identity(2), RFMatrix::identity(2), RFMatrix::identity(2)}};
  EXPECT_TRUE(ch_nerve_simplex(s).is_zero());
  EXPECT_TRUE(verify_face_sum(s).ok);
}

TEST(FaceSum, RandomRankTwo) {
  std::mt19937 rng(24);
  ChartPtr cstar_chart = make_chart("C*", {"z"});
  ChartPtr three = make_chart("V", {"x", "y", "v"});
  for (int trial = 0; trial < 50; ++trial) {
    int l = 1 + trial % 3;
    NerveSimplex s = random_simplex(rng, cstar_chart, 2, l);
    CheckReport r = verify_face_sum(s);
    EXPECT_TRUE(r.ok) << r.witnesses[0];
  }
  for (int l = 1; l <= 4; ++l) {
    NerveSimplex s = random_simplex(rng, three, 2, l);
    CheckReport r = verify_face_sum(s);
    EXPECT_TRUE(r.ok) << "l = " << l << ": " << r.witnesses[0];
  }
}

TEST(TotChVertex, LineBundlesOnCP1) {
  Cover c = cp1();
  for (long n = -3; n <= 3; ++n) {
    UPolyCochain ch = tot_ch_vertex(line_bundle(c, n), 1);
    EXPECT_EQ(ch.at({0}), UPolyForm::monomial(0, HoloForm::function(c.chart(0), 1)));
    EXPECT_EQ(ch.at({1}), UPolyForm::monomial(0, HoloForm::function(c.chart(1), 1)));
    EXPECT_EQ(ch.at({1, 0}), UPolyForm::monomial(1, dz_over_z(c.chart(0), n)));
    EXPECT_EQ(ch.at({0, 1}), UPolyForm::monomial(1, dz_over_z(c.chart(0), -n)));
    EXPECT_TRUE(check_closed(c, ch, 1).ok);
  }
}

TEST(TotChVertex, ClosedOnRandomData) {
  std::mt19937 rng(36);
  for (int trial = 0; trial < 3; ++trial) {
    Cover c = scaling_cover(rng, 3, 2);
    BundlePathData d = random_path_data(rng, c, 1 + trial % 2, 0);
    ASSERT_TRUE(validate_bundle_data(d).ok);
    UPolyCochain ch = tot_ch_vertex(d.level(0), 2);
    CheckReport r = check_closed(c, ch, 2);
    EXPECT_TRUE(r.ok) << r.witnesses[0];
  }
}

TEST(TotChVertex, IdentityDataGivesRank) {
  std::mt19937 rng(37);
  Cover c = scaling_cover(rng, 3, 2, true);
  ASSERT_TRUE(c.validate().ok);
  BundleVertexData d(c, 2);
  for (const auto& t : c.tuples(1)) {
    if (t[0] < t[1]) d.set_transition(t[0], t[1], RFMatrix::identity(2));
  }
  // Equal connections on overlaps: restrictions of one global connection.
  ConnectionMatrix a = random_connection(rng, c.chart(0), 2);
  for (int i = 0; i < 3; ++i) d.set_connection(i, c.restrict(a, 0, i));
  UPolyCochain ch = tot_ch_vertex(d, 2);
  for (const auto& [t, v] : ch.components()) {
    EXPECT_EQ(t.size(), 1u);
    EXPECT_EQ(v, UPolyForm::monomial(0, HoloForm::function(c.chart(t[0]), 2)));
  }
  EXPECT_EQ(ch.components().size(), 3u);
}

TEST(TotChVertex, LabelPermutation) {
  std::mt19937 rng(38);
  Cover c = scaling_cover(rng, 3, 2, true);
  BundlePathData d = random_path_data(rng, c, 2, 0);
  const std::vector<int> pi{2, 0, 1};  // new chart k is old chart pi[k]
  std::vector<ChartPtr> cs;
  for (int k = 0; k < 3; ++k) cs.push_back(c.chart(pi[k]));
  Cover p = Cover::complete(cs);
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) p.add_change_map(a, b, c.change_map(pi[a], pi[b]).components);
  }
  BundleVertexData dp(p, 2);
  for (int a = 0; a < 3; ++a) {
    dp.set_connection(a, d.level(0).connection(pi[a]));
    for (int b = a + 1; b < 3; ++b) dp.set_transition(a, b, d.level(0).g_in(pi[a], pi[b], pi[a]));
  }
  ASSERT_TRUE(validate_bundle_data(dp).ok);
  UPolyCochain old_ch = tot_ch_vertex(d.level(0), 2);
  UPolyCochain new_ch = tot_ch_vertex(dp, 2);
  for (const auto& t : p.tuples_up_to(2)) {
    Tuple told;
    for (int k : t) told.push_back(pi[k]);
    UPolyForm expected;
    UPolyForm old_value = old_ch.at(told);
    for (const auto& [m, w] : old_value.terms()) {
      expected.add(m, c.to_chart(w, c.anchor(told), pi[p.anchor(t)]));
    }
    EXPECT_EQ(new_ch.at(t), expected) << p.tuple_to_string(t);
  }
}

TEST(TotChSimplex, VertexCaseAndExample) {
  std::mt19937 rng(316);
  Cover c = scaling_cover(rng, 3, 2);
  BundlePathData d = random_path_data(rng, c, 2, 2);
  ASSERT_TRUE(validate_bundle_data(d).ok);
  for (int j = 0; j <= 2; ++j) {
    EXPECT_EQ(tot_ch_simplex(d, Generator{{j}, 2}, 2), tot_ch_vertex(d.level(j), 2));
  }
  UPolyCochain c12 = tot_ch_simplex(d, Generator{{1, 2}, 2}, 0);
  for (int i = 0; i < 3; ++i) {
    const RFMatrix& f = d.intertwiner(2, i);
    MatrixForm nf = apply_connection(MatrixForm::from_matrix(c.chart(i), f), d.level(1).connection(i),
                                     d.level(2).connection(i));
    HoloForm expected = trace_form(MatrixForm::from_matrix(c.chart(i), f.inverse()) * nf);
    EXPECT_EQ(c12.at({i}), UPolyForm::monomial(1, expected));
  }
  EXPECT_THROW(tot_ch_simplex(d, Generator{{0, 1}, 1}, 1), std::invalid_argument);
}

TEST(TotChSimplex, ChainMap) {
  std::mt19937 rng(317);
  for (int n = 1; n <= 2; ++n) {
    Cover c = scaling_cover(rng, 3, 2);
    BundlePathData d = random_path_data(rng, c, n == 1 ? 2 : 1, n);
    ChainMapTable table = tot_ch_table(d, 2);
    CheckReport r = validate_chain_map(c, table, n, 1);
    EXPECT_TRUE(r.ok) << "n = " << n << ": " << r.witnesses[0];
    EXPECT_GT(r.checked, 0);

    // Flipping the global sign on one generator breaks the chain-map property.
    ChainMapTable broken = table;
    Generator e01{{0, 1}, n};
    UPolyCochain neg;
    for (const auto& [t, v] : table.at(e01).components()) neg.set(t, -v);
    broken[e01] = neg;
    EXPECT_FALSE(validate_chain_map(c, broken, n, 1).ok);
  }
}

TEST(TotChSimplex, MatchesEzPipeline) {
  std::mt19937 rng(318);
  // Rank 1 on three-dimensional charts, rank 2 on two-dimensional ones.
  for (int n = 1; n <= 2; ++n) {
    for (std::size_t rank = 1; rank <= 2; ++rank) {
      Cover c = scaling_cover(rng, 4, rank == 1 ? 3 : 2);
      BundlePathData d = random_path_data(rng, c, rank, n, true, 1);
      for (const auto& e : all_generators(n)) {
        EXPECT_EQ(tot_ch_simplex(d, e, 3), ez_pipeline(d, e, 3)) << e.to_string() << " rank " << rank;
      }
    }
  }
}
