#include <gtest/gtest.h>

#include "gfp/errors.hpp"
#include "gfp/polynomial.hpp"
#include "gfp/rational.hpp"

using gfp::Polynomial;
using gfp::Rational;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(4, 6).to_string(), "2/3");
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(8, 4).to_string(), "2");
  EXPECT_THROW(Rational(1, 0), gfp::DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(0), gfp::DivisionByZero);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("17"), Rational(17));
  EXPECT_THROW(Rational::parse("1/"), gfp::ParseError);
  EXPECT_THROW(Rational::parse("abc"), gfp::ParseError);
}

TEST(Rational, Powers) {
  EXPECT_EQ(gfp::pow(Rational(2), 10L), Rational(1024));
  EXPECT_EQ(gfp::pow(Rational(2), -2L), Rational(1, 4));
  EXPECT_EQ(gfp::pow(Rational(-3, 2), 3L), Rational(-27, 8));
  EXPECT_EQ(gfp::pow(Rational(0), 0L), Rational(1));
  EXPECT_THROW(gfp::pow(Rational(0), -1L), gfp::DivisionByZero);
  EXPECT_EQ(gfp::sign_power(gfp::Integer(7)), Rational(-1));
}

TEST(PolyCore, Add) {
  EXPECT_EQ(P("x^2 + 1") + P("-x^2"), P("1"));
  EXPECT_EQ(Polynomial() + P("x^3 - 2"), P("x^3 - 2"));
  EXPECT_EQ(gfp::add(P("x"), P("x")), P("2*x"));
}

TEST(PolyCore, Mul) {
  EXPECT_EQ(P("x + 1") * P("x - 1"), P("x^2 - 1"));
  EXPECT_TRUE((P("x^2 + 3") * Polynomial()).is_zero());
  EXPECT_EQ(gfp::mul(P("x^2 + 1"), P("x")), P("x^3 + x"));
}

TEST(PolyCore, DegreeAndLeadingCoefficient) {
  auto a = gfp::degree_lc(P("x^3 + 2*x"));
  EXPECT_EQ(a.degree, 3U);
  EXPECT_EQ(a.lc, Rational(1));
  auto b = gfp::degree_lc(P("7"));
  EXPECT_EQ(b.degree, 0U);
  EXPECT_EQ(b.lc, Rational(7));
  auto z = gfp::degree_lc(Polynomial());
  EXPECT_FALSE(z.degree.has_value());
  EXPECT_EQ(z.lc, Rational(0));
}

TEST(PolyCore, Derivative) {
  EXPECT_EQ(P("x^2 + 1").derivative(), P("2*x"));
  EXPECT_TRUE(P("5").derivative().is_zero());
  EXPECT_EQ(gfp::derivative(P("x^3 + 2*x")), P("3*x^2 + 2"));
}

TEST(PolyCore, Evaluate) {
  EXPECT_EQ(P("x^3 + 2*x").evaluate(1), Rational(3));
  EXPECT_EQ(gfp::evaluate(P("x^3 + 2*x"), 2), Rational(12));
  EXPECT_EQ(Polynomial().evaluate(Rational(5, 7)), Rational(0));
  EXPECT_EQ(P("2*x - 1").evaluate(Rational(1, 2)), Rational(0));
}

TEST(PolyCore, Divrem) {
  auto a = gfp::divrem(P("x^2 + 1"), P("x^2 + 4"));
  EXPECT_EQ(a.quotient, P("1"));
  EXPECT_EQ(a.remainder, P("-3"));

  auto b = gfp::divrem(P("3*x^4 - x + 2"), P("3*x^4 - x + 2"));
  EXPECT_EQ(b.quotient, P("1"));
  EXPECT_TRUE(b.remainder.is_zero());

  auto c = gfp::divrem(P("x^3 + 2*x"), P("x"));
  EXPECT_EQ(c.quotient, P("x^2 + 2"));
  EXPECT_TRUE(c.remainder.is_zero());

  auto d = gfp::divrem(P("x^2"), P("2*x + 1"));
  EXPECT_EQ(d.quotient, P("1/2*x - 1/4"));
  EXPECT_EQ(d.remainder, P("1/4"));

  EXPECT_THROW(gfp::divrem(P("x"), Polynomial()), gfp::DivisionByZero);
}

TEST(PolyCore, Gcd) {
  EXPECT_EQ(gfp::poly_gcd(P("x^2 + 1"), P("x^3 + 2*x")), P("1"));
  EXPECT_EQ(gfp::poly_gcd(P("3*x^2 + 6"), Polynomial()), P("x^2 + 2"));
  EXPECT_EQ(gfp::poly_gcd(P("x"), P("x^2 + 2*x")), P("x"));
  EXPECT_EQ(gfp::poly_gcd(P("2*x^2 - 2"), P("4*x + 4")), P("x + 1"));
  EXPECT_THROW(gfp::poly_gcd(Polynomial(), Polynomial()), gfp::PreconditionError);
}

TEST(PolyText, Print) {
  EXPECT_EQ(P("x^3 + 2*x").to_string(), "x^3 + 2*x");
  EXPECT_EQ(Polynomial({Rational(3), 0, Rational(-1, 2)}).to_string(), "-1/2*x^2 + 3");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(P("-x").to_string(), "-x");
  EXPECT_EQ(P("4*x^2 - 1").to_string(), "4*x^2 - 1");
  EXPECT_EQ(P("x - x").to_string(), "0");
}

TEST(PolyText, ParseVariants) {
  EXPECT_EQ(P("  -x^2+  x -1 "), Polynomial({-1, 1, -1}));
  EXPECT_EQ(P("x^2 + 2*x^2"), P("3*x^2"));
  EXPECT_EQ(P("-3/4*x"), Polynomial({0, Rational(-3, 4)}));
  EXPECT_EQ(P("x + -2"), P("x - 2"));
}

TEST(PolyText, ParseErrors) {
  for (const char* bad : {"", "x^", "2*", "x + ", "y", "x^-1", "1/0*x", "x**2", "3 x"}) {
    EXPECT_THROW(P(bad), gfp::ParseError) << bad;
  }
}
