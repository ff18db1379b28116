#include <gtest/gtest.h>

#include <random>

#include "holochern/matrix.hpp"
#include "holochern/parser.hpp"
#include "test_support.hpp"

using namespace holochern;
using holochern::testing::random_monomial_unit_matrix;
using holochern::testing::random_rf;

namespace {

const std::vector<std::string> ZW = {"z", "w"};

RationalFunction P(const std::string& s) { return parse_expr(s, ZW); }

}  // namespace

TEST(GaussianRational, Arithmetic) {
  GaussianRational i = GaussianRational::imaginary_unit();
  EXPECT_EQ(i * i, GaussianRational(-1));
  GaussianRational a(mpq_class(1, 2), 3);
  EXPECT_EQ(a * a.inverse(), GaussianRational(1));
  EXPECT_EQ(GaussianRational(mpq_class(2, 4)).to_string(), "1/2");
  EXPECT_EQ(GaussianRational(1, 2).to_string(), "(1 + 2*i)");
  EXPECT_EQ(GaussianRational(1, -1).to_string(), "(1 - i)");
  EXPECT_EQ(GaussianRational(0, mpq_class(3, 2)).to_string(), "3/2*i");
  EXPECT_THROW(GaussianRational(0).inverse(), std::domain_error);
}

TEST(Polynomial, GrlexOrderAndText) {
  Polynomial z = Polynomial::variable("z");
  Polynomial w = Polynomial::variable("w");
  Polynomial p = z * z + w * w * w + w * z + Polynomial(GaussianRational(-1));
  // w < z alphabetically, so w is the most significant variable.
  EXPECT_EQ(p.to_string(), "w^3 + w*z + z^2 - 1");
}

TEST(Polynomial, GcdAndExactDivision) {
  Polynomial z = Polynomial::variable("z");
  Polynomial w = Polynomial::variable("w");
  Polynomial one(GaussianRational(1));
  Polynomial g = z * w + one;
  Polynomial a = g * (z + w);
  Polynomial b = g * (z - w) * z;
  EXPECT_EQ(gcd(a, b), g.monic());
  EXPECT_EQ(divide_exact(a, g), z + w);
  EXPECT_THROW(divide_exact(a, z), std::domain_error);
  EXPECT_EQ(gcd(z * z * w, z * w * w), z * w);
  EXPECT_TRUE(gcd(z + one, w + one).is_one());
}

TEST(Polynomial, RandomGcdDividesBoth) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    Polynomial g = holochern::testing::random_polynomial(rng, ZW, 3, 2);
    Polynomial a = holochern::testing::random_polynomial(rng, ZW, 3, 2) * g;
    Polynomial b = holochern::testing::random_polynomial(rng, ZW, 3, 2) * g;
    Polynomial d = gcd(a, b);
    EXPECT_NO_THROW(divide_exact(a, d));
    EXPECT_NO_THROW(divide_exact(b, d));
    EXPECT_NO_THROW(divide_exact(d, g.monic()));
  }
}

TEST(ParseExpr, SpecExamples) {
  RationalFunction f = parse_expr("(1+2*i)/z^2", {"z"});
  EXPECT_EQ(f.num().to_string(), "(1 + 2*i)");
  EXPECT_EQ(f.den().to_string(), "z^2");
  EXPECT_TRUE(P("z*w - w*z").is_zero());
  EXPECT_EQ(P("z*w - w*z"), RationalFunction());
  EXPECT_THROW(P("1/(z-z)"), ParseError);
}

TEST(ParseExpr, Grammar) {
  EXPECT_EQ(P("z^-2"), P("1/z^2"));
  EXPECT_EQ(P("z^(-2)"), P("1/(z*z)"));
  EXPECT_EQ(P("-z^2"), -(P("z") * P("z")));
  EXPECT_EQ(P("3/2*z"), P("z*3/2"));
  EXPECT_EQ(P("2 - 3 - 4"), RationalFunction(-5));
  EXPECT_EQ(P("i*i"), RationalFunction(-1));
  EXPECT_EQ(P("  ( z + w ) ^ 2 "), P("z^2 + 2*z*w + w^2"));
}

TEST(ParseExpr, Errors) {
  try {
    P("z + q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    P("z + * w");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P("(z + w"), ParseError);
  EXPECT_THROW(P("z^"), ParseError);
  EXPECT_THROW(P("(z-z)^-1"), ParseError);
  EXPECT_THROW(P("z w"), ParseError);
}

TEST(Normalize, SpecExamples) {
  Polynomial z = Polynomial::variable("z");
  Polynomial one(GaussianRational(1));
  EXPECT_EQ(RationalFunction::make(z * z - one, z - one), RationalFunction(z + one));
  RationalFunction h = RationalFunction::make(z.scaled(2), Polynomial(GaussianRational(4)));
  EXPECT_TRUE(h.den().is_one());
  EXPECT_EQ(h.to_string(), "1/2*z");
  RationalFunction zero = RationalFunction::make(Polynomial(), z.pow(3));
  EXPECT_TRUE(zero.num().is_zero());
  EXPECT_TRUE(zero.den().is_one());
  EXPECT_EQ(zero.to_string(), "0");
}

TEST(Normalize, DenominatorMonic) {
  RationalFunction f = P("(z + 1)/(2*i*z - 4)");
  EXPECT_TRUE(f.den().leading().coef.is_one());
  EXPECT_EQ(rf_normalize(f), f);
}

TEST(Normalize, RespectsProducts) {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    RationalFunction a = random_rf(rng, ZW);
    RationalFunction b = random_rf(rng, ZW);
    EXPECT_EQ(rf_normalize(a) * rf_normalize(b), rf_normalize(a * b));
    EXPECT_EQ(rf_normalize(rf_normalize(a)), rf_normalize(a));
  }
}

TEST(RationalFunction, FieldAxioms) {
  std::mt19937 rng(7);
  for (int t = 0; t < 80; ++t) {
    RationalFunction a = random_rf(rng, ZW);
    RationalFunction b = random_rf(rng, ZW);
    RationalFunction c = random_rf(rng, ZW);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(RationalFunction, Derivative) {
  EXPECT_EQ(P("1/z").derivative("z"), P("-1/z^2"));
  EXPECT_EQ(P("z^2*w").derivative("w"), P("z^2"));
  EXPECT_TRUE(P("z").derivative("w").is_zero());
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    RationalFunction a = random_rf(rng, ZW);
    RationalFunction b = random_rf(rng, ZW);
    EXPECT_EQ((a * b).derivative("z"), a.derivative("z") * b + a * b.derivative("z"));
  }
}

TEST(RationalFunction, Substitute) {
  RationalFunction f = P("w^2 + 1/w");
  RationalFunction g = f.substitute({{"w", P("1/z")}});
  EXPECT_EQ(g, P("z^-2 + z"));
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    RationalFunction a = random_rf(rng, ZW);
    RationalFunction b = random_rf(rng, ZW);
    std::map<std::string, RationalFunction> sub = {{"w", P("z + 1")}, {"z", P("z*w")}};
    EXPECT_EQ((a * b + b).substitute(sub), a.substitute(sub) * b.substitute(sub) + b.substitute(sub));
  }
}

TEST(RationalFunction, SerializeRoundTrip) {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    RationalFunction a = random_rf(rng, ZW, 4, 3);
    EXPECT_EQ(P(a.to_string()), a) << a.to_string();
    EXPECT_EQ(P(a.to_string()).to_string(), a.to_string());
  }
  for (const char* s : {"0", "1", "-i", "3/2*i*z", "(1 - i)*z^2 - w", "(z + 1) / (z*w)", "-3 / z"}) {
    RationalFunction a = P(s);
    EXPECT_EQ(P(a.to_string()), a) << s;
  }
}

TEST(RFMatrix, SpecExamples) {
  EXPECT_EQ(matrix_inverse(RFMatrix::identity(3)), RFMatrix::identity(3));
  RFMatrix d(2, 2, {P("z"), P("0"), P("0"), P("1/z")});
  RFMatrix di(2, 2, {P("1/z"), P("0"), P("0"), P("z")});
  EXPECT_EQ(matrix_inverse(d), di);
  RFMatrix s(2, 2, {P("z"), P("z"), P("1"), P("1")});
  EXPECT_THROW(matrix_inverse(s), std::domain_error);
}

TEST(RFMatrix, DoubleInverse) {
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    RFMatrix m = random_monomial_unit_matrix(rng, n, t % 4 == 0 ? ZW : std::vector<std::string>{"z"});
    RFMatrix inv = matrix_inverse(m);
    EXPECT_EQ(m * inv, RFMatrix::identity(n));
    EXPECT_EQ(matrix_inverse(inv), m);
  }
}
