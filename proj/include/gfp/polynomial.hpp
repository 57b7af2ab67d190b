#ifndef GFP_POLYNOMIAL_HPP
#define GFP_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfp/rational.hpp"

namespace gfp {

/// Degree of a polynomial. The zero polynomial has no degree and is
/// represented by an empty optional; callers must handle it explicitly.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i.
/// Always canonical: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  /// Coefficients in ascending order of power: {1, 0, 2} is 2x^2 + 1.
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  static Polynomial x() { return monomial(Rational(1), 1); }

  /// Parses the text grammar used throughout the tools, e.g.
  /// "x^3 + 2*x" or "-1/2*x^2 + 3". Throws ParseError.
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  /// True for nonzero constants and for zero.
  bool is_constant() const { return coeffs_.size() <= 1; }

  Degree degree() const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational lc() const;
  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(std::size_t i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Polynomial monic() const;
  Polynomial pow(unsigned exponent) const;
  Rational evaluate(const Rational& at) const;
  Polynomial derivative() const;

  /// Descending powers, zero terms omitted, "0" for the zero polynomial.
  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

struct DegreeLc {
  Degree degree;
  Rational lc;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
DegreeLc degree_lc(const Polynomial& p);
Polynomial derivative(const Polynomial& p);
Rational evaluate(const Polynomial& p, const Rational& at);

/// Euclidean division: p = q*quotient + remainder, deg(remainder) < deg(q).
/// Throws DivisionByZero when q is zero.
DivRem divrem(const Polynomial& p, const Polynomial& q);

/// Monic gcd over Q. Throws PreconditionError if both are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// True when q divides p exactly (q nonzero).
bool divides(const Polynomial& q, const Polynomial& p);

}  // namespace gfp

#endif  // GFP_POLYNOMIAL_HPP
