#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "gfp/errors.hpp"
#include "gfp/family.hpp"

using gfp::FamilyDefect;
using gfp::Kind;
using gfp::Polynomial;
using gfp::Rational;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

FamilyDefect defect_of(Kind kind, const char* d, const char* g, int p0, const char* p1) {
  try {
    gfp::custom_family(kind, P(d), P(g), p0, P(p1));
  } catch (const gfp::InvalidFamily& e) {
    return e.defect();
  }
  ADD_FAILURE() << "family was accepted";
  return FamilyDefect::ZeroPolynomial;
}

}  // namespace

TEST(Builtins, Fibonacci) {
  auto f = gfp::builtin_family("fibonacci");
  EXPECT_EQ(f.kind(), Kind::FibonacciType);
  EXPECT_EQ(f.d(), P("x"));
  EXPECT_EQ(f.g(), P("1"));
  EXPECT_EQ(f.alpha(), 1);
}

TEST(Builtins, ChebyshevT) {
  auto t = gfp::builtin_family("chebyshev-T");
  EXPECT_EQ(t.kind(), Kind::LucasType);
  EXPECT_EQ(t.p0(), 1);
  EXPECT_EQ(t.p1(), P("x"));
  EXPECT_EQ(t.d(), P("2*x"));
  EXPECT_EQ(t.g(), P("-1"));
  EXPECT_EQ(t.alpha(), 2);
}

TEST(Builtins, FermatLucas) {
  auto f = gfp::builtin_family("fermat-lucas");
  EXPECT_EQ(f.p0(), 2);
  EXPECT_EQ(f.p1(), P("3*x"));
  EXPECT_EQ(f.d(), P("3*x"));
  EXPECT_EQ(f.g(), P("-2"));
  EXPECT_EQ(f.alpha(), 1);
}

TEST(Builtins, AllNamesResolve) {
  EXPECT_EQ(gfp::builtin_family_names().size(), 12U);
  for (const auto& name : gfp::builtin_family_names()) {
    EXPECT_EQ(gfp::builtin_family(name).name(), name);
  }
}

TEST(Builtins, UnknownNames) {
  EXPECT_THROW(gfp::builtin_family("tribonacci"), gfp::UnknownFamily);
  try {
    gfp::builtin_family("pell-lucas");
    FAIL();
  } catch (const gfp::UnknownFamily& e) {
    EXPECT_NE(std::string(e.what()).find("pell-lucas-prime"), std::string::npos);
  }
}

TEST(CustomFamily, ValidMatchesBuiltin) {
  auto f = gfp::custom_family(Kind::FibonacciType, P("x"), P("1"), 0, P("1"));
  EXPECT_EQ(f, gfp::builtin_family("fibonacci"));
  auto l = gfp::custom_family(Kind::LucasType, P("x"), P("1"), 2, P("x"));
  EXPECT_EQ(l, gfp::builtin_family("lucas"));
  EXPECT_EQ(l.alpha(), 1);
}

TEST(CustomFamily, Defects) {
  EXPECT_EQ(defect_of(Kind::FibonacciType, "x", "x", 0, "1"), FamilyDefect::GcdNotOne);
  EXPECT_EQ(defect_of(Kind::FibonacciType, "x", "x + 1", 0, "1"), FamilyDefect::DegreeOrder);
  EXPECT_EQ(defect_of(Kind::FibonacciType, "x", "0", 0, "1"), FamilyDefect::ZeroPolynomial);
  EXPECT_EQ(defect_of(Kind::FibonacciType, "x", "1", 1, "1"), FamilyDefect::InitialValues);
  EXPECT_EQ(defect_of(Kind::LucasType, "x", "1", 3, "x"), FamilyDefect::LucasSideCondition);
  EXPECT_EQ(defect_of(Kind::LucasType, "2*x", "1", 2, "2*x"), FamilyDefect::LucasSideCondition);
  EXPECT_EQ(defect_of(Kind::LucasType, "x", "1", 2, "3*x"), FamilyDefect::DNotAlphaP1);
  EXPECT_EQ(defect_of(Kind::LucasType, "x", "1", 1, "x"), FamilyDefect::DNotAlphaP1);
}

TEST(CustomFamily, NegativeP0) {
  auto l = gfp::custom_family(Kind::LucasType, P("x"), P("1"), -2, P("-x"));
  EXPECT_EQ(l.alpha(), -1);
  EXPECT_EQ(l.generate(2), P("-x^2 - 2"));
}

TEST(Generate, Examples) {
  auto f = gfp::builtin_family("fibonacci");
  EXPECT_EQ(f.generate(4), P("x^3 + 2*x"));
  EXPECT_TRUE(f.generate(0).is_zero());
  EXPECT_EQ(gfp::builtin_family("lucas").generate(2), P("x^2 + 2"));
  EXPECT_EQ(gfp::builtin_family("chebyshev-U").generate(3), P("4*x^2 - 1"));
  EXPECT_EQ(gfp::builtin_family("chebyshev-T").generate(3), P("4*x^3 - 3*x"));
  EXPECT_EQ(gfp::builtin_family("morgan-voyce-C").generate(2), P("x^2 + 4*x + 2"));
}

TEST(Generate, RecurrenceHolds) {
  for (const auto& name : gfp::builtin_family_names()) {
    auto f = gfp::builtin_family(name);
    for (std::size_t n = 2; n <= 15; ++n) {
      EXPECT_EQ(f.generate(n), f.d() * f.generate(n - 1) + f.g() * f.generate(n - 2)) << name << " n=" << n;
    }
  }
}

TEST(Generate, ConcurrentFirstWrites) {
  auto f = gfp::builtin_family("fermat-lucas");
  const Polynomial expected = gfp::builtin_family("fermat-lucas").generate(40);
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      if (t % 2 == 0) {
        for (std::size_t n = 0; n <= 40; ++n) f.generate(n);
      } else {
        for (std::size_t n = 40; n > 0; --n) f.generate(n);
      }
      ok[t] = f.generate(40) == expected ? 1 : 0;
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}

TEST(Constants, Examples) {
  auto fermat = gfp::family_constants(gfp::builtin_family("fermat"));
  EXPECT_EQ(fermat.beta, Rational(3));
  EXPECT_EQ(fermat.eta, 1);
  EXPECT_EQ(fermat.omega, 0);
  EXPECT_EQ(fermat.rho, Rational(-2));
  EXPECT_EQ(fermat.lambda, Rational(-2));

  auto fib = gfp::family_constants(gfp::builtin_family("fibonacci"));
  EXPECT_EQ(fib.beta, Rational(1));
  EXPECT_EQ(fib.rho, Rational(1));

  auto u = gfp::family_constants(gfp::builtin_family("chebyshev-U"));
  EXPECT_EQ(u.beta, Rational(2));
  EXPECT_EQ(u.rho, Rational(-1));
}

TEST(Constants, NonConstantG) {
  auto f = gfp::custom_family(Kind::FibonacciType, P("x^2 + 1"), P("x"), 0, P("1"));
  auto c = gfp::family_constants(f);
  EXPECT_EQ(c.eta, 2);
  EXPECT_EQ(c.omega, 1);
  EXPECT_EQ(c.rho, Rational(1));  // Res(x, x^2 + 1) = 1
}

TEST(Conjugates, Builtins) {
  EXPECT_EQ(gfp::conjugate_of(gfp::builtin_family("fibonacci")).name(), "lucas");
  EXPECT_EQ(gfp::conjugate_of(gfp::builtin_family("chebyshev-T")).name(), "chebyshev-U");
  EXPECT_EQ(gfp::conjugate_of(gfp::builtin_family("vieta")).name(), "vieta-lucas");
  for (const auto& name : gfp::builtin_family_names()) {
    auto f = gfp::builtin_family(name);
    auto c = gfp::conjugate_of(f);
    EXPECT_EQ(gfp::conjugate_of(c).name(), name);
    EXPECT_EQ(gfp::family_constants(f), gfp::family_constants(c));
  }
}

TEST(Conjugates, Customs) {
  auto lucas = gfp::custom_family(Kind::LucasType, P("x^2 + 1"), P("3"), 2, P("x^2 + 1"));
  auto fib = gfp::conjugate_of(lucas);
  EXPECT_TRUE(fib.is_fibonacci_type());
  EXPECT_EQ(fib.d(), lucas.d());

  EXPECT_THROW(gfp::conjugate_of(fib), gfp::NoConjugate);
  auto back = gfp::conjugate_of(fib, 2);
  EXPECT_EQ(back, lucas);
}

TEST(Conjugates, PairChecks) {
  auto pair = gfp::make_conjugate_pair(gfp::builtin_family("chebyshev-U"), gfp::builtin_family("chebyshev-T"));
  EXPECT_EQ(pair.lucas.name(), "chebyshev-T");
  EXPECT_EQ(pair.fibonacci.name(), "chebyshev-U");
  EXPECT_THROW(gfp::make_conjugate_pair(gfp::builtin_family("lucas"), gfp::builtin_family("pell")), gfp::NotConjugate);
  EXPECT_THROW(gfp::make_conjugate_pair(gfp::builtin_family("lucas"), gfp::builtin_family("lucas")), gfp::NotConjugate);
}

TEST(DiscriminantPoly, Examples) {
  EXPECT_EQ(gfp::discriminant_poly(gfp::builtin_family("fibonacci")), P("x^2 + 4"));
  EXPECT_EQ(gfp::discriminant_poly(gfp::builtin_family("chebyshev-U")), P("4*x^2 - 4"));
  EXPECT_EQ(gfp::discriminant_poly(gfp::builtin_family("fermat")), P("9*x^2 - 8"));
}
