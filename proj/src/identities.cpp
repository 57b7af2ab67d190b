#include "gfp/identities.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "gfp/closed_forms.hpp"
#include "gfp/errors.hpp"
#include "gfp/sylvester.hpp"

namespace gfp {

namespace {

Param P(std::string name, long v) { return {std::move(name), v}; }
Param P(std::string name, std::string v) { return {std::move(name), std::move(v)}; }

std::size_t idx(long n) {
  if (n < 0) throw PreconditionError("negative sequence index " + std::to_string(n));
  return static_cast<std::size_t>(n);
}

const Polynomial& G(const GfpFamily& f, long n) { return f.generate(idx(n)); }

VerificationReport start(std::string identity, const GfpFamily& family) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.families = {family.name()};
  return r;
}

VerificationReport start(std::string identity, const ConjugatePair& pair) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.families = {pair.lucas.name(), pair.fibonacci.name()};
  return r;
}

void require_constant_g(const GfpFamily& f) {
  if (!f.g().is_constant()) {
    throw HypothesisViolation("needs constant g; '" + f.name() + "' has g = " + f.g().to_string());
  }
}

void require_kind(const GfpFamily& f, Kind kind) {
  if (f.kind() != kind) {
    throw WrongKind("'" + f.name() + "' is " + std::string(to_string(f.kind())) + ", expected " +
                    std::string(to_string(kind)));
  }
}

void require_at_least(long v, long lo, const char* what) {
  if (v < lo) {
    throw PreconditionError(std::string(what) + " must be >= " + std::to_string(lo) + ", got " + std::to_string(v));
  }
}

Polynomial neg_g_pow(const GfpFamily& f, long k) { return (-f.g()).pow(static_cast<unsigned>(k)); }

Integer half(const Integer& v) {
  if (!is_even(v)) throw InternalError("odd exponent cannot be halved: " + v.get_str());
  return v / 2;
}

std::string describe_gcd(const Polynomial& g) {
  return g.is_constant() ? std::string("constant gcd") : "gcd of positive degree: " + g.to_string();
}

}  // namespace

// ---------------------------------------------------------------------------

void VerificationReport::expect_equal(std::vector<Param> params, const ReportValue& expected, const ReportValue& got) {
  ++cases;
  if (expected != got) failures.push_back({std::move(params), expected, got});
}

void VerificationReport::fail(std::vector<Param> params, ReportValue expected, ReportValue got) {
  ++cases;
  failures.push_back({std::move(params), std::move(expected), std::move(got)});
}

void VerificationReport::merge(const VerificationReport& other) {
  cases += other.cases;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& f : other.families) {
    if (std::find(families.begin(), families.end(), f) == families.end()) families.push_back(f);
  }
  for (const auto& n : other.notes) {
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
  }
}

std::string to_string(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::string>) {
          return x;
        } else {
          return x.to_string();
        }
      },
      v);
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json grid = nlohmann::json::object();
  for (const auto& axis : report.grid) grid[axis.name] = {axis.lo, axis.hi};
  if (!report.families.empty()) grid["families"] = report.families;

  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& p : f.params) {
      std::visit([&](const auto& v) { params[p.name] = v; }, p.value);
    }
    failures.push_back({{"params", params}, {"expected", to_string(f.expected)}, {"got", to_string(f.got)}});
  }
  nlohmann::json out = {{"identity", report.identity},
                        {"grid", grid},
                        {"passed", report.passed()},
                        {"cases", report.cases},
                        {"failures", failures}};
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

// ---------------------------------------------------------------------------
// Division identities

VerificationReport check_fib_decomposition(const GfpFamily& family, long m, long q, long r) {
  require_kind(family, Kind::FibonacciType);
  require_at_least(m, 1, "m");
  require_at_least(q, 1, "q");
  require_at_least(r, 1, "r");
  auto report = start("fib-decomposition", family);
  const Polynomial rest = G(family, m * q + r) - family.g() * G(family, m * q - 1) * G(family, r);
  const Polynomial remainder = divrem(rest, G(family, m)).remainder;
  report.expect_equal({P("family", family.name()), P("m", m), P("q", q), P("r", r)}, Polynomial{}, remainder);
  return report;
}

VerificationReport check_lucas_decomposition(const GfpFamily& family, long m, long q, long r) {
  require_kind(family, Kind::LucasType);
  require_at_least(q, 1, "q");
  require_at_least(r, 1, "r");
  if (r >= m) throw PreconditionError("Lucas decomposition needs r < m, got r = " + std::to_string(r) +
                                      ", m = " + std::to_string(m));
  auto report = start("lucas-decomposition", family);
  const long t = (q + 1) / 2;
  Polynomial tail;
  if (q % 2 == 1) {
    const Rational sign = sign_power(Integer(m * (t - 1) + t + r));
    tail = sign * family.g().pow(static_cast<unsigned>((t - 1) * m + r)) * G(family, m - r);
  } else {
    const Rational sign = sign_power(Integer((m + 1) * t));
    tail = sign * family.g().pow(static_cast<unsigned>(m * t)) * G(family, r);
  }
  const Polynomial remainder = divrem(G(family, m * q + r) - tail, G(family, m)).remainder;
  report.expect_equal({P("family", family.name()), P("m", m), P("q", q), P("r", r)}, Polynomial{}, remainder);
  return report;
}

VerificationReport check_mixed_identities(const ConjugatePair& pair, long n, long q, long r) {
  require_at_least(n, 1, "n");
  require_at_least(q, 1, "q");
  require_at_least(r, 0, "r");
  if (q == 1 && r > n) throw PreconditionError("q = 1 needs r <= n");
  const GfpFamily& L = pair.lucas;
  const GfpFamily& F = pair.fibonacci;
  const Rational alpha(L.alpha());
  const Polynomial disc = discriminant_poly(L);
  auto report = start("mixed-identities", pair);

  Polynomial fib_rhs;
  Polynomial luc_rhs;
  if (q > 1) {
    const Polynomial tail = neg_g_pow(L, n);
    fib_rhs = alpha * G(L, n) * G(F, n * (q - 1) + r) - tail * G(F, n * (q - 2) + r);
    luc_rhs = disc * G(F, n) * G(F, n * (q - 1) + r) + alpha * tail * G(L, n * (q - 2) + r);
  } else {
    const Polynomial tail = neg_g_pow(L, r);
    fib_rhs = alpha * G(L, n) * G(F, r) + tail * G(F, n - r);
    luc_rhs = disc * G(F, n) * G(F, r) + alpha * tail * G(L, n - r);
  }
  report.expect_equal({P("pair", L.name()), P("n", n), P("q", q), P("r", r), P("part", "fibonacci")},
                      G(F, n * q + r), fib_rhs);
  report.expect_equal({P("pair", L.name()), P("n", n), P("q", q), P("r", r), P("part", "lucas")},
                      alpha * G(L, n * q + r), luc_rhs);
  return report;
}

// ---------------------------------------------------------------------------
// Resultant lemmas

VerificationReport check_res_g_lemmas(const GfpFamily& family, long n) {
  require_at_least(n, 1, "n");
  auto report = start("res-g", family);
  const Rational rho = family_constants(family).rho;
  const long k = family.is_fibonacci_type() ? n - 1 : n;
  report.expect_equal({P("family", family.name()), P("n", n)}, pow(rho, k), resultant(family.g(), G(family, n)));
  return report;
}

VerificationReport check_res_g_factor(const GfpFamily& family, long m, long n) {
  require_at_least(m, 1, "m");
  require_at_least(n, 1, "n");
  auto report = start("res-g-factor", family);
  const FamilyConstants c = family_constants(family);
  const long k = family.is_fibonacci_type() ? m - 1 : m;
  const Rational expected =
      sign_power(Integer(c.omega * c.eta * k)) * pow(c.rho, k) * resultant(G(family, m), G(family, n));
  report.expect_equal({P("family", family.name()), P("m", m), P("n", n)}, expected,
                      resultant(G(family, m), family.g() * G(family, n)));
  return report;
}

VerificationReport check_consecutive_resultant(const GfpFamily& family, long n) {
  require_kind(family, Kind::FibonacciType);
  require_at_least(n, 2, "n");
  auto report = start("consecutive-resultant", family);
  const Rational base = resultant_base(family_constants(family));
  const Rational expected = pow(base, half(Integer(n - 2) * (n - 1)));
  report.expect_equal({P("family", family.name()), P("n", n)}, expected,
                      resultant(G(family, n), G(family, n - 1)));
  return report;
}

VerificationReport check_res_m_mq1(const GfpFamily& family, long m, long q) {
  require_kind(family, Kind::FibonacciType);
  require_at_least(m, 1, "m");
  require_at_least(q, 1, "q");
  require_at_least(m * q, 2, "m*q");
  auto report = start("res-m-mq1", family);
  const Rational base = resultant_base(family_constants(family));
  const Rational expected = pow(base, half(Integer(m - 1) * (m * q - 2)));
  report.expect_equal({P("family", family.name()), P("m", m), P("q", q)}, expected,
                      resultant(G(family, m), G(family, m * q - 1)));
  return report;
}

VerificationReport check_res_linear_lucas(const GfpFamily& family, long n) {
  require_kind(family, Kind::LucasType);
  require_at_least(n, 1, "n");
  if (family.p0() != 2) throw HypothesisViolation("Res(L_1, L_n) formula is stated for L_0 = 2 only");
  auto report = start("res-linear-lucas", family);
  const FamilyConstants c = family_constants(family);
  Rational expected;
  if (n % 2 == 0) expected = pow(Rational(2), c.eta) * pow(resultant_base(c), n / 2);
  report.expect_equal({P("family", family.name()), P("n", n)}, expected, resultant(G(family, 1), G(family, n)));
  return report;
}

VerificationReport check_degree_law(const GfpFamily& family, long n) {
  require_at_least(n, 1, "n");
  auto report = start("degree-law", family);
  const FamilyConstants c = family_constants(family);
  const Polynomial& member = G(family, n);
  const long k = family.is_fibonacci_type() ? n - 1 : n;
  const Rational lc = pow(c.beta, k) / Rational(family.alpha());
  report.expect_equal({P("family", family.name()), P("n", n), P("part", "degree")}, Rational(c.eta * k),
                      member.degree() ? ReportValue(Rational(static_cast<long>(*member.degree())))
                                      : ReportValue(std::string("zero polynomial")));
  report.expect_equal({P("family", family.name()), P("n", n), P("part", "lc")}, lc, member.lc());
  return report;
}

// ---------------------------------------------------------------------------
// Modulo d^2 + 4g

VerificationReport fib_mod_disc(const GfpFamily& family, long n) {
  require_kind(family, Kind::FibonacciType);
  require_constant_g(family);
  require_at_least(n, 1, "n");
  auto report = start("fib-mod-disc", family);
  const Rational g = family.g().lc();
  Polynomial expected;
  if (n % 2 == 1) {
    expected = Polynomial::constant(Rational(n) * pow(-g, (n - 1) / 2));
  } else {
    const Rational scalar = sign_power(Integer((n + 2) / 2)) * Rational(n) * pow(g, (n - 2) / 2) / Rational(2);
    expected = scalar * family.d();
  }
  report.expect_equal({P("family", family.name()), P("n", n)}, expected,
                      divrem(G(family, n), discriminant_poly(family)).remainder);
  return report;
}

VerificationReport check_res_disc_poly(const GfpFamily& family, long n) {
  require_kind(family, Kind::FibonacciType);
  require_constant_g(family);
  require_at_least(n, 1, "n");
  auto report = start("res-disc-poly", family);
  const FamilyConstants c = family_constants(family);
  const Rational expected =
      pow(pow(c.beta, 2 * c.eta - c.omega) * c.rho, n - 1) * pow(Rational(n), 2 * c.eta);
  report.expect_equal({P("family", family.name()), P("n", n)}, expected,
                      resultant(discriminant_poly(family), G(family, n)));
  return report;
}

// ---------------------------------------------------------------------------
// Derivatives

Polynomial deriv_f_closed(const ConjugatePair& pair, long n) {
  require_constant_g(pair.lucas);
  require_at_least(n, 1, "n");
  const GfpFamily& L = pair.lucas;
  const GfpFamily& F = pair.fibonacci;
  const Polynomial numerator =
      L.d().derivative() * (Rational(n * L.alpha()) * G(L, n) - L.d() * G(F, n));
  DivRem qr = divrem(numerator, discriminant_poly(L));
  if (!qr.remainder.is_zero()) {
    throw InternalError("derivative numerator not divisible by d^2 + 4g for n = " + std::to_string(n) +
                        "; remainder " + qr.remainder.to_string());
  }
  return std::move(qr.quotient);
}

Polynomial deriv_l_closed(const ConjugatePair& pair, long n) {
  require_constant_g(pair.lucas);
  require_at_least(n, 1, "n");
  const Rational scale = Rational(n) / Rational(pair.lucas.alpha());
  return scale * pair.lucas.d().derivative() * G(pair.fibonacci, n);
}

VerificationReport check_derivatives(const ConjugatePair& pair, long n) {
  auto report = start("derivatives", pair);
  report.expect_equal({P("family", pair.fibonacci.name()), P("n", n)}, G(pair.fibonacci, n).derivative(),
                      deriv_f_closed(pair, n));
  report.expect_equal({P("family", pair.lucas.name()), P("n", n)}, G(pair.lucas, n).derivative(),
                      deriv_l_closed(pair, n));
  return report;
}

std::vector<Rational> derivative_sequence(const GfpFamily& family, const Rational& at, long count) {
  std::vector<Rational> out;
  for (long n = 1; n <= count; ++n) out.push_back(G(family, n).derivative().evaluate(at));
  return out;
}

VerificationReport check_derivative_sequences() {
  struct Prefix {
    const char* family;
    long at;
    const char* oeis;
    std::vector<long> values;  // n = 1..6
  };
  // Computed once by formal differentiation and Horner evaluation with an
  // independent CAS; the OEIS ids are labels only.
  static const std::vector<Prefix> kPrefixes = {
      {"fibonacci", 1, "A001629", {0, 1, 2, 5, 10, 20}},
      {"fibonacci", 2, "A006645", {0, 1, 4, 14, 44, 131}},
      {"lucas", 1, "A045925", {1, 2, 6, 12, 25, 48}},
      {"lucas", 2, "A093967", {1, 4, 15, 48, 145, 420}},
  };
  VerificationReport report;
  report.identity = "deriv-sequences";
  report.grid = {{"n", 1, 6}};
  for (const auto& prefix : kPrefixes) {
    const GfpFamily family = builtin_family(prefix.family);
    const ConjugatePair pair = conjugate_pair_of(family);
    if (std::find(report.families.begin(), report.families.end(), family.name()) == report.families.end()) {
      report.families.push_back(family.name());
    }
    for (long n = 1; n <= static_cast<long>(prefix.values.size()); ++n) {
      const Polynomial closed = family.is_fibonacci_type() ? deriv_f_closed(pair, n) : deriv_l_closed(pair, n);
      const Rational expected(prefix.values[static_cast<std::size_t>(n - 1)]);
      std::vector<Param> params = {P("family", prefix.family), P("at", prefix.at), P("n", n), P("oeis", prefix.oeis)};
      report.expect_equal(params, expected, closed.evaluate(Rational(prefix.at)));
      report.expect_equal(std::move(params), expected, G(family, n).derivative().evaluate(Rational(prefix.at)));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// gcd and vanishing criteria

VerificationReport check_gcd_fib(const GfpFamily& family, long m, long n) {
  require_kind(family, Kind::FibonacciType);
  require_at_least(m, 1, "m");
  require_at_least(n, 1, "n");
  auto report = start("gcd-fib", family);
  const Polynomial g = poly_gcd(G(family, m), G(family, n));
  const bool coprime_indices = std::gcd(m, n) == 1;
  const std::string expected = coprime_indices ? "constant gcd" : "gcd of positive degree";
  const std::string got = g.is_constant() ? "constant gcd" : "gcd of positive degree";
  report.expect_equal({P("family", family.name()), P("m", m), P("n", n)}, expected, got);
  return report;
}

VerificationReport check_gcd_lucas(const GfpFamily& family, long m, long n) {
  require_kind(family, Kind::LucasType);
  require_at_least(m, 1, "m");
  require_at_least(n, 1, "n");
  auto report = start("gcd-lucas", family);
  const long delta = std::gcd(m, n);
  const Polynomial g = poly_gcd(G(family, m), G(family, n));
  Polynomial expected;
  if (e2(m) == e2(n)) {
    expected = G(family, delta).monic();
  } else {
    // gcd(L_delta, L_0) with L_0 = p0 a nonzero constant.
    expected = poly_gcd(G(family, delta), G(family, 0));
    report.notes.push_back("unequal 2-adic valuations: gcd(L_delta, L_0) with raw L_0 = " +
                           std::to_string(family.p0()) + " normalizes to 1");
  }
  report.expect_equal({P("family", family.name()), P("m", m), P("n", n)}, expected, g);
  return report;
}

VerificationReport check_gcd_mixed(const ConjugatePair& pair, long n, long m) {
  require_at_least(m, 1, "m");
  require_at_least(n, 1, "n");
  auto report = start("gcd-mixed", pair);
  const Polynomial g = poly_gcd(G(pair.lucas, n), G(pair.fibonacci, m));
  const Polynomial expected =
      e2(m) > e2(n) ? G(pair.lucas, std::gcd(m, n)).monic() : Polynomial::constant(1);
  report.expect_equal({P("pair", pair.lucas.name()), P("n", n), P("m", m)}, expected, g);
  return report;
}

namespace {

void zero_agreement(VerificationReport& report, std::vector<Param> params, const ClosedResult& closed,
                    const Polynomial& a, const Polynomial& b) {
  const auto label = [](bool zero) { return ReportValue(std::string(zero ? "zero" : "nonzero")); };
  const bool oracle_zero = resultant(a, b).is_zero();
  const Polynomial g = poly_gcd(a, b);

  auto branch_params = params;
  branch_params.push_back(P("part", "closed-branch"));
  report.expect_equal(std::move(branch_params), label(oracle_zero), label(closed.branch == Branch::Zero));

  params.push_back(P("part", "shared-factor"));
  if (label(!g.is_constant()) != label(oracle_zero)) {
    report.fail(std::move(params), label(oracle_zero), ReportValue(describe_gcd(g)));
  } else {
    ++report.cases;
  }
}

}  // namespace

VerificationReport check_zero_criteria_fib(const GfpFamily& family, long m, long n) {
  auto report = start("zero-criteria", family);
  zero_agreement(report, {P("family", family.name()), P("m", m), P("n", n)}, res_ff_closed(family, m, n),
                 G(family, m), G(family, n));
  return report;
}

VerificationReport check_zero_criteria_lucas(const GfpFamily& family, long m, long n) {
  auto report = start("zero-criteria", family);
  zero_agreement(report, {P("family", family.name()), P("m", m), P("n", n)}, res_ll_closed(family, m, n),
                 G(family, m), G(family, n));
  return report;
}

VerificationReport check_zero_criteria_mixed(const ConjugatePair& pair, long n, long m) {
  auto report = start("zero-criteria", pair);
  zero_agreement(report, {P("pair", pair.lucas.name()), P("n", n), P("m", m)}, res_lf_closed(pair.lucas, n, m),
                 G(pair.lucas, n), G(pair.fibonacci, m));
  return report;
}

// ---------------------------------------------------------------------------
// Closed forms against the oracle

VerificationReport check_res_ff(const GfpFamily& family, long n, long m) {
  auto report = start("res-fib-fib", family);
  report.expect_equal({P("family", family.name()), P("n", n), P("m", m)}, res_ff_closed(family, n, m).value,
                      resultant(G(family, n), G(family, m)));
  return report;
}

VerificationReport check_res_ll(const GfpFamily& family, long m, long n) {
  auto report = start("res-luc-luc", family);
  report.expect_equal({P("family", family.name()), P("m", m), P("n", n)}, res_ll_closed(family, m, n).value,
                      resultant(G(family, m), G(family, n)));
  return report;
}

VerificationReport check_res_lf(const ConjugatePair& pair, long n, long m) {
  auto report = start("res-luc-fib", pair);
  report.expect_equal({P("pair", pair.lucas.name()), P("n", n), P("m", m)},
                      res_lf_closed(pair.lucas, pair.fibonacci, n, m).value,
                      resultant(G(pair.lucas, n), G(pair.fibonacci, m)));
  return report;
}

VerificationReport check_disc_f(const GfpFamily& family, long n) {
  auto report = start("disc-fib", family);
  report.expect_equal({P("family", family.name()), P("n", n)}, disc_f_closed(family, n),
                      discriminant(G(family, n)));
  return report;
}

VerificationReport check_disc_l(const GfpFamily& family, long n) {
  auto report = start("disc-luc", family);
  report.expect_equal({P("family", family.name()), P("n", n)}, disc_l_closed(family, n),
                      discriminant(G(family, n)));
  return report;
}

// ---------------------------------------------------------------------------
// Generic laws

VerificationReport check_resultant_axioms(const Polynomial& f, const Polynomial& h, const Polynomial& p,
                                          unsigned power) {
  if (f.is_zero() || h.is_zero() || p.is_zero()) throw ZeroPolynomialError("resultant axioms need nonzero inputs");
  VerificationReport report;
  report.identity = "resultant-axioms";
  const std::vector<Param> base = {P("f", f.to_string()), P("h", h.to_string()), P("p", p.to_string())};
  auto with = [&](const char* law) {
    auto params = base;
    params.push_back(P("law", law));
    return params;
  };
  const long df = static_cast<long>(*f.degree());
  const long dh = static_cast<long>(*h.degree());
  const Rational res_fh = resultant(f, h);
  const Rational res_fp = resultant(f, p);

  report.expect_equal(with("swap"), sign_power(Integer(df * dh)) * resultant(h, f), res_fh);
  report.expect_equal(with("multiplicative"), res_fp * res_fh, resultant(f, p * h));
  auto power_params = with("power");
  power_params.push_back(P("k", static_cast<long>(power)));
  report.expect_equal(std::move(power_params), pow(res_fp, static_cast<long>(power)), resultant(f, p.pow(power)));

  const Polynomial big = f * p + h;
  if (!big.is_zero()) {
    const long dg = static_cast<long>(*big.degree());
    report.expect_equal(with("reduction"), pow(f.lc(), dg - dh) * res_fh, resultant(f, big));
  }
  const bool shared = !poly_gcd(f, h).is_constant();
  report.expect_equal(with("vanishing"), ReportValue(std::string(shared ? "zero" : "nonzero")),
                      ReportValue(std::string(res_fh.is_zero() ? "zero" : "nonzero")));
  return report;
}

VerificationReport check_product_discriminant(const Polynomial& p, const Polynomial& q) {
  VerificationReport report;
  report.identity = "product-discriminant";
  const Rational res = resultant(p, q);
  report.expect_equal({P("p", p.to_string()), P("q", q.to_string())}, discriminant(p) * discriminant(q) * res * res,
                      discriminant(p * q));
  return report;
}

}  // namespace gfp
