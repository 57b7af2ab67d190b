#include <gtest/gtest.h>

#include "gfp/errors.hpp"
#include "gfp/identities.hpp"
#include "gfp/sylvester.hpp"

using gfp::Polynomial;
using gfp::Rational;

namespace {

gfp::GfpFamily F(const char* name) { return gfp::builtin_family(name); }
gfp::ConjugatePair pair(const char* name) { return gfp::conjugate_pair_of(F(name)); }
Polynomial P(const char* text) { return Polynomial::parse(text); }

#define EXPECT_PASSES(report)                                              \
  do {                                                                     \
    const auto r_ = (report);                                              \
    EXPECT_TRUE(r_.passed()) << gfp::to_json(r_).dump();                   \
    EXPECT_GT(r_.cases, 0U);                                               \
  } while (0)

}  // namespace

TEST(Report, RecordsFailures) {
  gfp::VerificationReport r;
  r.identity = "demo";
  r.expect_equal({{"n", 3L}}, Rational(1), Rational(1));
  EXPECT_TRUE(r.passed());
  r.expect_equal({{"n", 4L}, {"family", std::string("pell")}}, Rational(2), P("x"));
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.cases, 2U);
  ASSERT_EQ(r.failures.size(), 1U);

  const auto j = gfp::to_json(r);
  EXPECT_EQ(j["identity"], "demo");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["failures"][0]["expected"], "2");
  EXPECT_EQ(j["failures"][0]["got"], "x");
  EXPECT_EQ(j["failures"][0]["params"]["n"], 4);
  EXPECT_EQ(j["failures"][0]["params"]["family"], "pell");
}

TEST(Decomposition, Fibonacci) {
  EXPECT_PASSES(gfp::check_fib_decomposition(F("fibonacci"), 2, 1, 1));
  EXPECT_PASSES(gfp::check_fib_decomposition(F("fibonacci"), 3, 2, 1));
  EXPECT_PASSES(gfp::check_fib_decomposition(F("pell"), 2, 3, 1));
}

TEST(Decomposition, Lucas) {
  EXPECT_PASSES(gfp::check_lucas_decomposition(F("lucas"), 2, 1, 1));
  EXPECT_PASSES(gfp::check_lucas_decomposition(F("lucas"), 3, 2, 1));
  EXPECT_PASSES(gfp::check_lucas_decomposition(F("chebyshev-T"), 2, 2, 1));
  EXPECT_THROW(gfp::check_lucas_decomposition(F("lucas"), 2, 1, 2), gfp::PreconditionError);
}

TEST(Decomposition, Mixed) {
  EXPECT_PASSES(gfp::check_mixed_identities(pair("fibonacci"), 2, 2, 1));
  EXPECT_PASSES(gfp::check_mixed_identities(pair("fibonacci"), 3, 1, 1));
  EXPECT_PASSES(gfp::check_mixed_identities(pair("chebyshev-T"), 2, 2, 0));
}

TEST(ResG, Lemmas) {
  EXPECT_EQ(gfp::resultant(P("-1"), F("morgan-voyce-B").generate(4)), Rational(-1));
  EXPECT_PASSES(gfp::check_res_g_lemmas(F("morgan-voyce-B"), 4));
  EXPECT_PASSES(gfp::check_res_g_lemmas(F("fibonacci"), 5));
  EXPECT_PASSES(gfp::check_res_g_factor(F("fermat-lucas"), 3, 4));
}

TEST(ResG, NonConstantG) {
  auto l = gfp::custom_family(gfp::Kind::LucasType, P("x^2 + x + 1"), P("x"), 2, P("x^2 + x + 1"));
  auto f = gfp::conjugate_of(l);
  for (long n = 1; n <= 5; ++n) {
    EXPECT_PASSES(gfp::check_res_g_lemmas(l, n));
    EXPECT_PASSES(gfp::check_res_g_lemmas(f, n));
    EXPECT_PASSES(gfp::check_res_g_factor(f, n, 3));
    EXPECT_PASSES(gfp::check_res_g_factor(l, 3, n));
  }
}

TEST(Consecutive, Examples) {
  auto pell = F("pell");
  EXPECT_EQ(gfp::resultant(pell.generate(3), pell.generate(2)), Rational(4));
  auto u = F("chebyshev-U");
  EXPECT_EQ(gfp::resultant(u.generate(3), u.generate(2)), Rational(-4));
  EXPECT_PASSES(gfp::check_consecutive_resultant(F("fibonacci"), 4));
  EXPECT_PASSES(gfp::check_consecutive_resultant(pell, 3));
  EXPECT_PASSES(gfp::check_consecutive_resultant(u, 3));
  EXPECT_PASSES(gfp::check_res_m_mq1(F("fermat"), 3, 2));
}

TEST(LinearLucas, OnlyForP0Two) {
  EXPECT_PASSES(gfp::check_res_linear_lucas(F("lucas"), 4));
  EXPECT_PASSES(gfp::check_res_linear_lucas(F("fermat-lucas"), 3));
  EXPECT_THROW(gfp::check_res_linear_lucas(F("chebyshev-T"), 2), gfp::HypothesisViolation);
}

TEST(DegreeLaw, AllBuiltins) {
  for (const auto& name : gfp::builtin_family_names()) {
    for (long n = 1; n <= 8; ++n) EXPECT_PASSES(gfp::check_degree_law(F(name.c_str()), n));
  }
}

TEST(FibModDisc, Examples) {
  auto fib = F("fibonacci");
  EXPECT_EQ(gfp::divrem(fib.generate(3), P("x^2 + 4")).remainder, P("-3"));
  EXPECT_EQ(gfp::divrem(fib.generate(4), P("x^2 + 4")).remainder, P("-2*x"));
  EXPECT_EQ(gfp::divrem(F("chebyshev-U").generate(3), P("4*x^2 - 4")).remainder, P("3"));
  EXPECT_PASSES(gfp::fib_mod_disc(fib, 3));
  EXPECT_PASSES(gfp::fib_mod_disc(fib, 4));
  EXPECT_PASSES(gfp::fib_mod_disc(F("chebyshev-U"), 3));
  auto xg = gfp::custom_family(gfp::Kind::FibonacciType, P("x^2 + 1"), P("x"), 0, P("1"));
  EXPECT_THROW(gfp::fib_mod_disc(xg, 3), gfp::HypothesisViolation);
}

TEST(ResDiscPoly, Examples) {
  EXPECT_EQ(gfp::resultant(P("x^2 + 4"), F("fibonacci").generate(3)), Rational(9));
  EXPECT_EQ(gfp::resultant(P("x^2 + 4"), F("fibonacci").generate(4)), Rational(16));
  EXPECT_EQ(gfp::resultant(P("4*x^2 + 4"), F("pell").generate(3)), Rational(144));
  EXPECT_PASSES(gfp::check_res_disc_poly(F("fibonacci"), 3));
  EXPECT_PASSES(gfp::check_res_disc_poly(F("pell"), 3));
}

TEST(Derivatives, ClosedForms) {
  EXPECT_EQ(gfp::deriv_f_closed(pair("fibonacci"), 3), P("2*x"));
  EXPECT_TRUE(gfp::deriv_f_closed(pair("fibonacci"), 1).is_zero());
  EXPECT_EQ(gfp::deriv_f_closed(pair("chebyshev-U"), 3), P("8*x"));
  EXPECT_EQ(gfp::deriv_l_closed(pair("lucas"), 2), P("2*x"));
  EXPECT_EQ(gfp::deriv_l_closed(pair("chebyshev-T"), 3), P("12*x^2 - 3"));
  EXPECT_EQ(gfp::deriv_l_closed(pair("fermat-lucas"), 2), P("18*x"));
  EXPECT_PASSES(gfp::check_derivatives(pair("pell"), 7));
}

TEST(Derivatives, NeedConstantG) {
  auto l = gfp::custom_family(gfp::Kind::LucasType, P("x^2 + x + 1"), P("x"), 2, P("x^2 + x + 1"));
  EXPECT_THROW(gfp::deriv_l_closed(gfp::conjugate_pair_of(l), 3), gfp::HypothesisViolation);
  EXPECT_THROW(gfp::deriv_f_closed(gfp::conjugate_pair_of(l), 3), gfp::HypothesisViolation);
}

TEST(Derivatives, Sequences) {
  const std::vector<Rational> a001629{0, 1, 2, 5, 10, 20};
  EXPECT_EQ(gfp::derivative_sequence(F("fibonacci"), 1, 6), a001629);
  const std::vector<Rational> a006645{0, 1, 4, 14, 44, 131};
  EXPECT_EQ(gfp::derivative_sequence(F("fibonacci"), 2, 6), a006645);
  EXPECT_PASSES(gfp::check_derivative_sequences());
}

TEST(Gcd, Criteria) {
  auto fib = F("fibonacci");
  EXPECT_GT(*gfp::poly_gcd(fib.generate(4), fib.generate(6)).degree(), 0U);
  EXPECT_PASSES(gfp::check_gcd_fib(fib, 4, 6));
  auto lucas = F("lucas");
  EXPECT_EQ(gfp::poly_gcd(lucas.generate(2), lucas.generate(6)), lucas.generate(2).monic());
  EXPECT_PASSES(gfp::check_gcd_lucas(lucas, 2, 6));
  EXPECT_EQ(gfp::poly_gcd(lucas.generate(1), fib.generate(2)), P("x"));
  EXPECT_PASSES(gfp::check_gcd_mixed(pair("lucas"), 1, 2));
}

TEST(ZeroCriteria, Agree) {
  EXPECT_PASSES(gfp::check_zero_criteria_fib(F("pell"), 4, 6));
  EXPECT_PASSES(gfp::check_zero_criteria_lucas(F("chebyshev-T"), 3, 5));
  EXPECT_PASSES(gfp::check_zero_criteria_mixed(pair("vieta"), 3, 4));
}

TEST(Oracle, ClosedFormCheckers) {
  EXPECT_PASSES(gfp::check_res_ff(F("fermat"), 5, 3));
  EXPECT_PASSES(gfp::check_res_ll(F("pell-lucas-prime"), 4, 6));
  EXPECT_PASSES(gfp::check_res_lf(pair("morgan-voyce-C"), 6, 3));
  EXPECT_PASSES(gfp::check_disc_f(F("vieta"), 6));
  EXPECT_PASSES(gfp::check_disc_l(F("fermat-lucas"), 5));
}

TEST(Axioms, FixedTriple) {
  EXPECT_PASSES(gfp::check_resultant_axioms(P("x^3 - 2*x + 1"), P("2*x^2 + 5"), P("x - 3"), 2));
  EXPECT_PASSES(gfp::check_resultant_axioms(P("x^2 - 1"), P("x^2 + 2*x + 1"), P("7"), 3));
  EXPECT_THROW(gfp::check_resultant_axioms(Polynomial(), P("x"), P("x"), 1), gfp::ZeroPolynomialError);
}

TEST(ProductDiscriminant, SquaredResultant) {
  const Polynomial p = P("x^2 + 3");
  const Polynomial q = P("2*x - 5");
  EXPECT_PASSES(gfp::check_product_discriminant(p, q));
  const Rational res = gfp::resultant(p, q);
  EXPECT_NE(gfp::discriminant(p * q), gfp::discriminant(p) * gfp::discriminant(q) * res);
}
