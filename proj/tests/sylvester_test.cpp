#include <gtest/gtest.h>

#include <vector>

#include "gfp/errors.hpp"
#include "gfp/sylvester.hpp"

using gfp::Polynomial;
using gfp::Rational;
using gfp::SylvesterMatrix;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

std::vector<Rational> row(const SylvesterMatrix& m, std::size_t i) {
  std::vector<Rational> out;
  for (std::size_t j = 0; j < m.dimension(); ++j) out.push_back(m.at(i, j));
  return out;
}

std::vector<Rational> R(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(SylvesterMatrix, Layout) {
  SylvesterMatrix a(P("x^2 + 1"), P("x^3 + 2*x"));
  EXPECT_EQ(a.dimension(), 5U);
  EXPECT_EQ(row(a, 0), R({1, 0, 1, 0, 0}));
  EXPECT_EQ(row(a, 3), R({1, 0, 2, 0, 0}));

  SylvesterMatrix b(P("x"), P("x^2 + 2"));
  EXPECT_EQ(b.dimension(), 3U);
  EXPECT_EQ(row(b, 0), R({1, 0, 0}));
  EXPECT_EQ(row(b, 1), R({0, 1, 0}));
  EXPECT_EQ(row(b, 2), R({1, 0, 2}));

  SylvesterMatrix c(P("2*x"), P("4*x^2 - 1"));
  EXPECT_EQ(row(c, 0), R({2, 0, 0}));
  EXPECT_EQ(row(c, 1), R({0, 2, 0}));
  EXPECT_EQ(row(c, 2), R({4, 0, -1}));
}

TEST(SylvesterMatrix, DebugText) {
  SylvesterMatrix b(P("x"), P("1/2*x^2 + 2"));
  EXPECT_EQ(b.debug_string(), "1\t0\t0\n0\t1\t0\n1/2\t0\t2\n");
}

TEST(SylvesterMatrix, Errors) {
  EXPECT_THROW(SylvesterMatrix(Polynomial(), P("x")), gfp::ZeroPolynomialError);
  EXPECT_THROW(SylvesterMatrix(P("3"), P("5")), gfp::PreconditionError);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(gfp::det_fraction_free(R({1, 0, 0, 0, 1, 0, 0, 0, 1}), 3), Rational(1));
  EXPECT_EQ(gfp::det_fraction_free(R({1, 2, 3, 4, 5, 6, 1, 2, 3}), 3), Rational(0));
  EXPECT_EQ(gfp::det_fraction_free(R({1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 2, 0, 0, 0, 1, 0, 2, 0}), 5),
            Rational(1));
}

TEST(Determinant, NeedsPivotingAndFractions) {
  // Zero in the leading position forces a row swap.
  EXPECT_EQ(gfp::det_fraction_free(R({0, 1, 1, 0}), 2), Rational(-1));
  EXPECT_EQ(gfp::det_fraction_free(R({0, 2, 1, 3, 0, 1, 1, 1, 0}), 3), Rational(5));
  std::vector<Rational> half{Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)};
  EXPECT_EQ(gfp::det_fraction_free(half, 2), Rational(1, 10) - Rational(1, 12));
}

TEST(Resultant, Examples) {
  EXPECT_EQ(gfp::resultant(P("x^2 + 1"), P("x^3 + 2*x")), Rational(1));
  EXPECT_EQ(gfp::resultant(P("x"), P("x^2 + 2")), Rational(2));
  EXPECT_EQ(gfp::resultant(P("7"), P("x^3 + 2*x")), Rational(343));
  EXPECT_EQ(gfp::resultant(P("x^3 + 2*x"), P("-2")), Rational(-8));
  EXPECT_EQ(gfp::resultant(P("3"), P("5")), Rational(1));
  EXPECT_EQ(gfp::resultant(P("x - 1"), P("x^2 - 1")), Rational(0));
  EXPECT_EQ(gfp::resultant(P("x - 2"), P("x - 5")), Rational(-3));
  EXPECT_THROW(gfp::resultant(Polynomial(), P("x")), gfp::ZeroPolynomialError);
}

TEST(Resultant, RootProduct) {
  // Res(a (x - r1)(x - r2), q) = a^deg q * q(r1) q(r2).
  const Polynomial p = P("3*x^2 - 9*x + 6");  // 3 (x - 1)(x - 2)
  const Polynomial q = P("x^3 - x + 5");
  EXPECT_EQ(gfp::resultant(p, q), Rational(27) * q.evaluate(1) * q.evaluate(2));
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(gfp::discriminant(P("x^2 + 1")), Rational(-4));
  EXPECT_EQ(gfp::discriminant(P("x^2 + 2")), Rational(-8));
  EXPECT_EQ(gfp::discriminant(P("x^2")), Rational(0));
  EXPECT_EQ(gfp::discriminant(P("2*x")), Rational(1));
  EXPECT_EQ(gfp::discriminant(P("x^3 - x")), Rational(4));
  EXPECT_EQ(gfp::discriminant(P("2*x^2 + 3*x - 1")), Rational(17));
  EXPECT_THROW(gfp::discriminant(P("4")), gfp::PreconditionError);
  EXPECT_THROW(gfp::discriminant(Polynomial()), gfp::ZeroPolynomialError);
}
