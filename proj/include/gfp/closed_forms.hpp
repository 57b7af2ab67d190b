#ifndef GFP_CLOSED_FORMS_HPP
#define GFP_CLOSED_FORMS_HPP

#include "gfp/family.hpp"
#include "gfp/rational.hpp"

namespace gfp {

/// 2-adic valuation: the largest k with 2^k | n. Throws for n < 1.
long e2(long n);

enum class Branch { Zero, Formula };

/// Case-split inputs that selected the branch.
struct Gate {
  long gcd = 0;
  long e2_first = 0;
  long e2_second = 0;
};

struct ClosedResult {
  Rational value;
  Branch branch = Branch::Formula;
  Gate gate;
};

/// (-1)^(eta*omega) * beta^(2*eta - omega) * rho, the base shared by the
/// resultant formulas.
Rational resultant_base(const FamilyConstants& c);

/// Res(F_n, F_m) for a Fibonacci-type family: 0 when gcd(m, n) > 1,
/// otherwise base^((n-1)(m-1)/2).
ClosedResult res_ff_closed(const GfpFamily& family, long n, long m);

/// Res(L_m, L_n) for a Lucas-type family: 0 when E2(m) = E2(n), otherwise
/// alpha^(-eta(n+m)) 2^(eta gcd(m,n)) base^(nm/2).
ClosedResult res_ll_closed(const GfpFamily& family, long m, long n);

/// Res(L_n, F_m) for a Lucas-type family and its conjugate: 0 when
/// E2(n) < E2(m), otherwise 2^(eta gcd - eta) alpha^(eta(1-m)) base^(n(m-1)/2).
ClosedResult res_lf_closed(const GfpFamily& lucas, long n, long m);
/// Same, checking that `fibonacci` really is the conjugate of `lucas`.
ClosedResult res_lf_closed(const GfpFamily& lucas, const GfpFamily& fibonacci, long n, long m);

/// Dis(F_n) for eta = 1 and constant g, n >= 2. Exact rational: n = 2
/// contributes 2^-1.
Rational disc_f_closed(const GfpFamily& family, long n);

/// Dis(L_n) for eta = 1 and constant g, n >= 1.
Rational disc_l_closed(const GfpFamily& family, long n);

/// True when eta = 1 and omega = 0, the discriminant formulas' hypothesis.
bool discriminant_formula_applies(const GfpFamily& family);

}  // namespace gfp

#endif  // GFP_CLOSED_FORMS_HPP
