#ifndef GFP_IDENTITIES_HPP
#define GFP_IDENTITIES_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gfp/family.hpp"
#include "gfp/polynomial.hpp"
#include "gfp/rational.hpp"

namespace gfp {

/// Expected/observed value in a counterexample. Strings carry
/// non-algebraic observations ("gcd has positive degree", error text).
using ReportValue = std::variant<Rational, Polynomial, std::string>;

struct Param {
  std::string name;
  std::variant<long, std::string> value;
};

struct Failure {
  std::vector<Param> params;
  ReportValue expected;
  ReportValue got;
};

struct GridAxis {
  std::string name;
  long lo = 0;
  long hi = 0;
};

/// Outcome of checking one identity over a set of parameter tuples.
/// passed() is true exactly when no failure was recorded.
struct VerificationReport {
  std::string identity;
  std::vector<GridAxis> grid;
  std::vector<std::string> families;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  std::size_t cases = 0;

  bool passed() const { return failures.empty(); }

  /// Records one checked case; a failure is appended when expected != got.
  void expect_equal(std::vector<Param> params, const ReportValue& expected, const ReportValue& got);
  void fail(std::vector<Param> params, ReportValue expected, ReportValue got);
  /// Folds another report for the same identity into this one.
  void merge(const VerificationReport& other);
};

std::string to_string(const ReportValue& v);

/// {identity, grid, passed, cases, failures:[{params, expected, got}], notes}
/// with rationals and polynomials rendered as exact strings.
nlohmann::json to_json(const VerificationReport& report);

// ---------------------------------------------------------------------------
// Division identities

/// F_{mq+r} - g F_{mq-1} F_r is divisible by F_m. m, q, r >= 1.
VerificationReport check_fib_decomposition(const GfpFamily& family, long m, long q, long r);

/// L_{mq+r} minus its parity-dependent tail (t = ceil(q/2)) is divisible
/// by L_m. Requires 1 <= r < m and q >= 1.
VerificationReport check_lucas_decomposition(const GfpFamily& family, long m, long q, long r);

/// Both Lucas/Fibonacci mixing identities for F_{nq+r} and alpha L_{nq+r},
/// with (a-b)^2 taken as d^2 + 4g. n, q >= 1, r >= 0; q = 1 needs r <= n.
VerificationReport check_mixed_identities(const ConjugatePair& pair, long n, long q, long r);

// ---------------------------------------------------------------------------
// Resultant lemmas (Sylvester oracle against the stated value)

/// Res(g, F_n) = rho^(n-1) (Fibonacci-type) or Res(g, L_n) = rho^n
/// (Lucas-type). n >= 1.
VerificationReport check_res_g_lemmas(const GfpFamily& family, long n);

/// Res(G_m, g G_n) = (-1)^(omega eta k) rho^k Res(G_m, G_n), with k = m - 1
/// for Fibonacci-type and k = m for Lucas-type. m, n >= 1.
VerificationReport check_res_g_factor(const GfpFamily& family, long m, long n);

/// Res(F_n, F_{n-1}) = base^((n-2)(n-1)/2), n >= 2.
VerificationReport check_consecutive_resultant(const GfpFamily& family, long n);

/// Res(F_m, F_{mq-1}) = base^((m-1)(mq-2)/2), m, q >= 1, mq >= 2.
VerificationReport check_res_m_mq1(const GfpFamily& family, long m, long q);

/// Res(L_1, L_n) = 0 for odd n and 2^eta base^(n/2) for even n. Only
/// stated for p0 = 2; other families raise HypothesisViolation.
VerificationReport check_res_linear_lucas(const GfpFamily& family, long n);

/// deg F_n = eta(n-1), lc F_n = beta^(n-1); deg L_n = eta n, lc L_n =
/// beta^n / alpha. n >= 1.
VerificationReport check_degree_law(const GfpFamily& family, long n);

// ---------------------------------------------------------------------------
// Remainders modulo d^2 + 4g (constant g only)

/// F_n mod (d^2 + 4g) equals n(-g)^((n-1)/2) for odd n and
/// (-1)^((n+2)/2) n d g^((n-2)/2) / 2 for even n.
VerificationReport fib_mod_disc(const GfpFamily& family, long n);

/// Res(d^2 + 4g, F_n) = (beta^(2eta-omega) rho)^(n-1) n^(2 eta).
VerificationReport check_res_disc_poly(const GfpFamily& family, long n);

// ---------------------------------------------------------------------------
// Derivatives (constant g only)

/// F_n' from d'(n alpha L_n - d F_n) / (d^2 + 4g). The division must be
/// exact; a remainder throws InternalError.
Polynomial deriv_f_closed(const ConjugatePair& pair, long n);

/// L_n' = n d' F_n / alpha.
Polynomial deriv_l_closed(const ConjugatePair& pair, long n);

/// Both closed derivatives against formal differentiation.
VerificationReport check_derivatives(const ConjugatePair& pair, long n);

/// Values of G_n'(at) for n = 1..count, by formal differentiation.
std::vector<Rational> derivative_sequence(const GfpFamily& family, const Rational& at, long count);

/// Derivative prefixes at x = 1 and x = 2 for fibonacci and lucas,
/// through both the closed form and formal differentiation.
VerificationReport check_derivative_sequences();

// ---------------------------------------------------------------------------
// gcd and vanishing criteria

/// gcd(F_m, F_n) = 1 exactly when gcd(m, n) = 1.
VerificationReport check_gcd_fib(const GfpFamily& family, long m, long n);
/// gcd(L_m, L_n) = L_delta when E2(m) = E2(n), a constant otherwise.
VerificationReport check_gcd_lucas(const GfpFamily& family, long m, long n);
/// gcd(L_n, F_m) = L_delta when E2(m) > E2(n), 1 otherwise.
VerificationReport check_gcd_mixed(const ConjugatePair& pair, long n, long m);

/// Closed-form zero branch <=> Sylvester resultant is 0 <=> the two
/// polynomials share a factor of positive degree. `second` is ignored
/// for same-family checks.
VerificationReport check_zero_criteria_fib(const GfpFamily& family, long m, long n);
VerificationReport check_zero_criteria_lucas(const GfpFamily& family, long m, long n);
VerificationReport check_zero_criteria_mixed(const ConjugatePair& pair, long n, long m);

// ---------------------------------------------------------------------------
// Closed forms against the Sylvester oracle

VerificationReport check_res_ff(const GfpFamily& family, long n, long m);
VerificationReport check_res_ll(const GfpFamily& family, long m, long n);
VerificationReport check_res_lf(const ConjugatePair& pair, long n, long m);
VerificationReport check_disc_f(const GfpFamily& family, long n);
VerificationReport check_disc_l(const GfpFamily& family, long n);

// ---------------------------------------------------------------------------
// Generic resultant laws on arbitrary polynomials

/// Swap, multiplicativity, power (exponent `power`), reduction (with
/// G = f*p + h) and vanishing laws on one triple. f, h, p nonzero.
VerificationReport check_resultant_axioms(const Polynomial& f, const Polynomial& h, const Polynomial& p,
                                          unsigned power);

/// Dis(PQ) = Dis(P) Dis(Q) Res(P, Q)^2 for deg P, deg Q >= 1.
VerificationReport check_product_discriminant(const Polynomial& p, const Polynomial& q);

}  // namespace gfp

#endif  // GFP_IDENTITIES_HPP
