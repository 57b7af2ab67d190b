#include "gfp/closed_forms.hpp"

#include <numeric>
#include <string>

#include "gfp/errors.hpp"

namespace gfp {

namespace {

void require_positive(long v, const char* what) {
  if (v < 1) throw PreconditionError(std::string(what) + " must be >= 1, got " + std::to_string(v));
}

void require_kind(const GfpFamily& f, Kind kind) {
  if (f.kind() != kind) {
    throw WrongKind("'" + f.name() + "' is " + std::string(to_string(f.kind())) + ", expected " +
                    std::string(to_string(kind)));
  }
}

/// value / 2, asserting the value is even.
Integer exact_half(const Integer& v, const char* where) {
  if (!is_even(v)) throw InternalError(std::string("odd exponent cannot be halved in ") + where + ": " + v.get_str());
  return v / 2;
}

void require_linear_d_constant_g(const GfpFamily& f) {
  if (!discriminant_formula_applies(f)) {
    throw HypothesisViolation("discriminant formula needs deg(d) = 1 and constant g; '" + f.name() + "' has deg(d) = " +
                              std::to_string(*f.d().degree()) + ", deg(g) = " + std::to_string(*f.g().degree()));
  }
}

}  // namespace

long e2(long n) {
  if (n < 1) throw PreconditionError("2-adic valuation needs a positive integer, got " + std::to_string(n));
  long k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return k;
}

Rational resultant_base(const FamilyConstants& c) {
  return sign_power(Integer(c.eta * c.omega)) * pow(c.beta, Integer(2 * c.eta - c.omega)) * c.rho;
}

bool discriminant_formula_applies(const GfpFamily& family) {
  return *family.d().degree() == 1 && family.g().is_constant();
}

ClosedResult res_ff_closed(const GfpFamily& family, long n, long m) {
  require_kind(family, Kind::FibonacciType);
  require_positive(n, "n");
  require_positive(m, "m");
  ClosedResult out;
  out.gate = {std::gcd(m, n), e2(n), e2(m)};
  if (out.gate.gcd > 1) {
    out.branch = Branch::Zero;
    out.value = 0;
    return out;
  }
  const FamilyConstants c = family_constants(family);
  const Integer exponent = exact_half(Integer(n - 1) * Integer(m - 1), "Fibonacci-type resultant");
  out.value = pow(resultant_base(c), exponent);
  return out;
}

ClosedResult res_ll_closed(const GfpFamily& family, long m, long n) {
  require_kind(family, Kind::LucasType);
  require_positive(m, "m");
  require_positive(n, "n");
  ClosedResult out;
  out.gate = {std::gcd(m, n), e2(m), e2(n)};
  if (out.gate.e2_first == out.gate.e2_second) {
    out.branch = Branch::Zero;
    out.value = 0;
    return out;
  }
  const FamilyConstants c = family_constants(family);
  const Integer eta(c.eta);
  const Integer half = exact_half(Integer(n) * Integer(m), "Lucas-type resultant");
  out.value = pow(Rational(family.alpha()), -eta * (n + m)) * pow(Rational(2), eta * out.gate.gcd) *
              pow(resultant_base(c), half);
  return out;
}

ClosedResult res_lf_closed(const GfpFamily& lucas, long n, long m) {
  require_kind(lucas, Kind::LucasType);
  require_positive(n, "n");
  require_positive(m, "m");
  ClosedResult out;
  out.gate = {std::gcd(m, n), e2(n), e2(m)};
  if (out.gate.e2_first < out.gate.e2_second) {
    out.branch = Branch::Zero;
    out.value = 0;
    return out;
  }
  const FamilyConstants c = family_constants(lucas);
  const Integer eta(c.eta);
  const Integer half = exact_half(Integer(n) * Integer(m - 1), "Lucas/Fibonacci resultant");
  out.value = pow(Rational(2), eta * out.gate.gcd - eta) * pow(Rational(lucas.alpha()), eta * (1 - m)) *
              pow(resultant_base(c), half);
  return out;
}

ClosedResult res_lf_closed(const GfpFamily& lucas, const GfpFamily& fibonacci, long n, long m) {
  require_kind(lucas, Kind::LucasType);
  require_kind(fibonacci, Kind::FibonacciType);
  make_conjugate_pair(lucas, fibonacci);
  return res_lf_closed(lucas, n, m);
}

Rational disc_f_closed(const GfpFamily& family, long n) {
  require_kind(family, Kind::FibonacciType);
  require_linear_d_constant_g(family);
  if (n < 2) throw PreconditionError("Fibonacci-type discriminant needs n >= 2 (F_1 is constant), got " +
                                     std::to_string(n));
  const FamilyConstants c = family_constants(family);
  const Rational d_prime = family.d().derivative().lc();
  const Integer N(n);
  return pow(-c.rho, exact_half((N - 2) * (N - 1), "Fibonacci-type discriminant")) *
         pow(Rational(2) * d_prime, N - 1) * pow(Rational(N), N - 3) * pow(c.beta, (N - 1) * (N - 3));
}

Rational disc_l_closed(const GfpFamily& family, long n) {
  require_kind(family, Kind::LucasType);
  require_linear_d_constant_g(family);
  require_positive(n, "n");
  const FamilyConstants c = family_constants(family);
  const Rational d_prime = family.d().derivative().lc();
  const Integer N(n);
  return pow(-c.rho, exact_half(N * (N - 1), "Lucas-type discriminant")) * pow(Rational(2), N - 1) *
         pow(Rational(N) * d_prime, N) * pow(Rational(family.alpha()), 2 - 2 * N) * pow(c.beta, N * (N - 2));
}

}  // namespace gfp
