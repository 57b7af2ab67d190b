#include "gfp/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "gfp/sylvester.hpp"

namespace gfp {

struct GfpFamily::Cache {
  std::shared_mutex mutex;
  // deque: push_back never moves existing elements, so handed-out
  // references survive later growth.
  std::deque<Polynomial> values;
};

namespace {

struct BuiltinSpec {
  const char* name;
  const char* partner;
  Kind kind;
  const char* d;
  const char* g;
  int p0;
  const char* p1;
};

// clang-format off
constexpr BuiltinSpec kBuiltins[] = {
    {"fibonacci",        "lucas",            Kind::FibonacciType, "x",     "1",  0, "1"},
    {"lucas",            "fibonacci",        Kind::LucasType,     "x",     "1",  2, "x"},
    {"pell",             "pell-lucas-prime", Kind::FibonacciType, "2*x",   "1",  0, "1"},
    {"pell-lucas-prime", "pell",             Kind::LucasType,     "2*x",   "1",  1, "x"},
    {"fermat",           "fermat-lucas",     Kind::FibonacciType, "3*x",   "-2", 0, "1"},
    {"fermat-lucas",     "fermat",           Kind::LucasType,     "3*x",   "-2", 2, "3*x"},
    {"chebyshev-U",      "chebyshev-T",      Kind::FibonacciType, "2*x",   "-1", 0, "1"},
    {"chebyshev-T",      "chebyshev-U",      Kind::LucasType,     "2*x",   "-1", 1, "x"},
    {"morgan-voyce-B",   "morgan-voyce-C",   Kind::FibonacciType, "x + 2", "-1", 0, "1"},
    {"morgan-voyce-C",   "morgan-voyce-B",   Kind::LucasType,     "x + 2", "-1", 2, "x + 2"},
    {"vieta",            "vieta-lucas",      Kind::FibonacciType, "x",     "-1", 0, "1"},
    {"vieta-lucas",      "vieta",            Kind::LucasType,     "x",     "-1", 2, "x"},
};
// clang-format on

const BuiltinSpec* find_builtin(std::string_view name) {
  for (const auto& spec : kBuiltins) {
    if (name == spec.name) return &spec;
  }
  return nullptr;
}

/// gcd of the numerators of all coefficients; 0 for the zero polynomial.
Integer numerator_content(const Polynomial& p) {
  Integer c = 0;
  for (const auto& coeff : p.coefficients()) {
    const Integer num = coeff.numerator();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), num.get_mpz_t());
  }
  return c;
}

bool shares_integer_content(int p0, const Polynomial& p) {
  Integer g = numerator_content(p);
  mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(std::abs(p0)));
  return g != 1;
}

std::string join_names() {
  std::string out;
  for (const auto& n : builtin_family_names()) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

std::string_view to_string(Kind kind) { return kind == Kind::FibonacciType ? "fibonacci-type" : "lucas-type"; }

GfpFamily::GfpFamily(std::string name, Kind kind, Polynomial d, Polynomial g, int p0, Polynomial p1, int alpha)
    : name_(std::move(name)),
      kind_(kind),
      d_(std::move(d)),
      g_(std::move(g)),
      p0_(p0),
      p1_(std::move(p1)),
      alpha_(alpha),
      cache_(std::make_shared<Cache>()) {}

const Polynomial& GfpFamily::generate(std::size_t n) const {
  {
    std::shared_lock lock(cache_->mutex);
    if (n < cache_->values.size()) return cache_->values[n];
  }
  std::unique_lock lock(cache_->mutex);
  auto& v = cache_->values;
  if (v.empty()) {
    v.push_back(Polynomial::constant(p0_));
    v.push_back(p1_);
  }
  while (v.size() <= n) {
    const std::size_t k = v.size();
    v.push_back(d_ * v[k - 1] + g_ * v[k - 2]);
  }
  return v[n];
}

const std::vector<std::string>& builtin_family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& spec : kBuiltins) out.emplace_back(spec.name);
    return out;
  }();
  return names;
}

GfpFamily builtin_family(std::string_view name) {
  if (name == "pell-lucas") {
    throw UnknownFamily("pell-lucas violates gcd(p0, p1) = 1 (gcd(2, 2x) = 2); use pell-lucas-prime, Q'_n = Q_n/2");
  }
  const BuiltinSpec* spec = find_builtin(name);
  if (spec == nullptr) {
    throw UnknownFamily("unknown family '" + std::string(name) + "'; valid names: " + join_names());
  }
  return custom_family(spec->kind, Polynomial::parse(spec->d), Polynomial::parse(spec->g), spec->p0,
                       Polynomial::parse(spec->p1), spec->name);
}

GfpFamily custom_family(Kind kind, const Polynomial& d, const Polynomial& g, int p0, const Polynomial& p1,
                        std::string name) {
  if (d.is_zero() || g.is_zero()) throw InvalidFamily(FamilyDefect::ZeroPolynomial, "d and g must be nonzero");
  const Polynomial common = poly_gcd(d, g);
  if (!common.is_constant()) {
    throw InvalidFamily(FamilyDefect::GcdNotOne, "gcd(d, g) = " + common.to_string() + " is not 1");
  }
  if (*d.degree() <= *g.degree()) {
    throw InvalidFamily(FamilyDefect::DegreeOrder, "deg(d) must exceed deg(g); got deg(d) = " +
                                                        std::to_string(*d.degree()) +
                                                        ", deg(g) = " + std::to_string(*g.degree()));
  }

  int alpha = 1;
  if (kind == Kind::FibonacciType) {
    if (p0 != 0 || p1 != Polynomial::constant(1)) {
      throw InvalidFamily(FamilyDefect::InitialValues, "Fibonacci-type families start from p0 = 0, p1 = 1");
    }
  } else {
    if (p0 != 1 && p0 != -1 && p0 != 2 && p0 != -2) {
      throw InvalidFamily(FamilyDefect::LucasSideCondition, "Lucas-type p0 must be +-1 or +-2, got " +
                                                                std::to_string(p0));
    }
    if (p1.is_constant()) {
      throw InvalidFamily(FamilyDefect::LucasSideCondition, "Lucas-type p1 must have degree >= 1");
    }
    // Integer content only: over Q[x] a nonzero constant g is a unit, and
    // fermat-lucas (p0 = 2, g = -2) is a member of the class.
    if (shares_integer_content(p0, p1)) {
      throw InvalidFamily(FamilyDefect::LucasSideCondition,
                          "gcd(p0, p1) != 1 for p0 = " + std::to_string(p0) + ", p1 = " + p1.to_string());
    }
    if (shares_integer_content(p0, d)) {
      throw InvalidFamily(FamilyDefect::LucasSideCondition,
                          "gcd(p0, d) != 1 for p0 = " + std::to_string(p0) + ", d = " + d.to_string());
    }
    alpha = 2 / p0;
    if (d != Rational(alpha) * p1) {
      throw InvalidFamily(FamilyDefect::DNotAlphaP1, "d = " + d.to_string() + " is not alpha*p1 with alpha = " +
                                                         std::to_string(alpha) + ", p1 = " + p1.to_string());
    }
  }
  return GfpFamily(std::move(name), kind, d, g, p0, p1, alpha);
}

FamilyConstants family_constants(const GfpFamily& family) {
  FamilyConstants c;
  c.beta = family.d().lc();
  c.lambda = family.g().lc();
  c.eta = static_cast<long>(*family.d().degree());
  c.omega = static_cast<long>(*family.g().degree());
  c.rho = resultant(family.g(), family.d());
  return c;
}

GfpFamily conjugate_of(const GfpFamily& family, std::optional<int> partner_p0) {
  if (const BuiltinSpec* spec = find_builtin(family.name());
      spec != nullptr && !partner_p0 && family == builtin_family(spec->name)) {
    return builtin_family(spec->partner);
  }
  const std::string name = family.name() + "-conjugate";
  if (family.is_lucas_type()) {
    return custom_family(Kind::FibonacciType, family.d(), family.g(), 0, Polynomial::constant(1), name);
  }
  if (!partner_p0) {
    throw NoConjugate("no known conjugate for '" + family.name() + "'; supply the Lucas-type partner's p0");
  }
  const int p0 = *partner_p0;
  if (p0 != 1 && p0 != -1 && p0 != 2 && p0 != -2) {
    throw InvalidFamily(FamilyDefect::LucasSideCondition, "Lucas-type p0 must be +-1 or +-2");
  }
  const Rational inv_alpha(Integer(p0), Integer(2));
  return custom_family(Kind::LucasType, family.d(), family.g(), p0, inv_alpha * family.d(), name);
}

Polynomial discriminant_poly(const GfpFamily& family) {
  return family.d() * family.d() + Rational(4) * family.g();
}

ConjugatePair make_conjugate_pair(const GfpFamily& a, const GfpFamily& b) {
  if (a.kind() == b.kind()) {
    throw NotConjugate("'" + a.name() + "' and '" + b.name() + "' are both " + std::string(to_string(a.kind())));
  }
  if (a.d() != b.d() || a.g() != b.g()) {
    throw NotConjugate("'" + a.name() + "' and '" + b.name() + "' do not share d and g");
  }
  return a.is_lucas_type() ? ConjugatePair{a, b} : ConjugatePair{b, a};
}

ConjugatePair conjugate_pair_of(const GfpFamily& family) { return make_conjugate_pair(family, conjugate_of(family)); }

}  // namespace gfp
