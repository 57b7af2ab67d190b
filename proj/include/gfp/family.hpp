#ifndef GFP_FAMILY_HPP
#define GFP_FAMILY_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfp/errors.hpp"
#include "gfp/polynomial.hpp"
#include "gfp/rational.hpp"

namespace gfp {

enum class Kind { FibonacciType, LucasType };

std::string_view to_string(Kind kind);

/// Why custom_family rejected its input.
enum class FamilyDefect {
  ZeroPolynomial,       // d or g is zero
  GcdNotOne,            // gcd(d, g) has positive degree
  DegreeOrder,          // deg d <= deg g
  InitialValues,        // Fibonacci-type with (p0, p1) != (0, 1)
  LucasSideCondition,   // |p0| not in {1, 2}, shared integer content with p0, or deg p1 < 1
  DNotAlphaP1,          // d != (2 / p0) * p1
};

class InvalidFamily : public Error {
 public:
  InvalidFamily(FamilyDefect defect, const std::string& what) : Error(what), defect_(defect) {}
  FamilyDefect defect() const { return defect_; }

 private:
  FamilyDefect defect_;
};

/// beta = lc(d), lambda = lc(g), eta = deg d, omega = deg g, rho = Res(g, d).
struct FamilyConstants {
  Rational beta;
  Rational lambda;
  long eta = 0;
  long omega = 0;
  Rational rho;

  friend bool operator==(const FamilyConstants&, const FamilyConstants&) = default;
};

/// One validated sequence G_0 = p0, G_1 = p1, G_n = d G_{n-1} + g G_{n-2}.
/// Immutable; copies share a thread-safe memo of generated members.
class GfpFamily {
 public:
  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  bool is_fibonacci_type() const { return kind_ == Kind::FibonacciType; }
  bool is_lucas_type() const { return kind_ == Kind::LucasType; }
  const Polynomial& d() const { return d_; }
  const Polynomial& g() const { return g_; }
  int p0() const { return p0_; }
  const Polynomial& p1() const { return p1_; }
  /// 2 / p0 for Lucas-type, 1 for Fibonacci-type.
  int alpha() const { return alpha_; }

  /// n-th member. The reference stays valid for the family's lifetime.
  const Polynomial& generate(std::size_t n) const;

  /// Same recurrence and initial values; the name is not compared.
  friend bool operator==(const GfpFamily& a, const GfpFamily& b) {
    return a.kind_ == b.kind_ && a.p0_ == b.p0_ && a.d_ == b.d_ && a.g_ == b.g_ && a.p1_ == b.p1_;
  }

 private:
  struct Cache;

  GfpFamily(std::string name, Kind kind, Polynomial d, Polynomial g, int p0, Polynomial p1, int alpha);

  friend GfpFamily custom_family(Kind, const Polynomial&, const Polynomial&, int, const Polynomial&, std::string);

  std::string name_;
  Kind kind_;
  Polynomial d_;
  Polynomial g_;
  int p0_;
  Polynomial p1_;
  int alpha_;
  std::shared_ptr<Cache> cache_;
};

/// Names accepted by builtin_family, in table order.
const std::vector<std::string>& builtin_family_names();

/// Throws UnknownFamily (listing valid names) for anything else.
GfpFamily builtin_family(std::string_view name);

/// Validates and builds a family. Throws InvalidFamily with the specific
/// defect. For Fibonacci-type, p0 must be 0 and p1 must be 1.
GfpFamily custom_family(Kind kind, const Polynomial& d, const Polynomial& g, int p0, const Polynomial& p1,
                        std::string name = "custom");

FamilyConstants family_constants(const GfpFamily& family);

/// The family of the other kind with the same d and g. Built-ins map to
/// their table partner. A Lucas-type custom maps to the Fibonacci-type
/// family on (d, g); a Fibonacci-type custom needs partner_p0, otherwise
/// NoConjugate is thrown.
GfpFamily conjugate_of(const GfpFamily& family, std::optional<int> partner_p0 = std::nullopt);

/// d^2 + 4g, the square of the difference of the two characteristic roots.
Polynomial discriminant_poly(const GfpFamily& family);

/// A Lucas-type family and its Fibonacci-type conjugate.
struct ConjugatePair {
  GfpFamily lucas;
  GfpFamily fibonacci;
};

/// Orders the two families by kind and checks they share d and g.
/// Throws NotConjugate otherwise.
ConjugatePair make_conjugate_pair(const GfpFamily& a, const GfpFamily& b);

/// Pair built from either member of a conjugate pair.
ConjugatePair conjugate_pair_of(const GfpFamily& family);

}  // namespace gfp

#endif  // GFP_FAMILY_HPP
