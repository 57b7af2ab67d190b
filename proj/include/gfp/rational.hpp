#ifndef GFP_RATIONAL_HPP
#define GFP_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gfp {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}               // NOLINT(google-explicit-constructor)
  Rational(long long v) : value_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(const Integer& v) : value_(v) {}     // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" (q > 0 after sign normalization, q != 0).
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const { return from_mpq(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.value_ = std::move(q);
    return r;
  }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// base^exponent for any integer exponent. A negative exponent inverts the
/// base; 0^negative throws DivisionByZero. 0^0 = 1.
Rational pow(const Rational& base, const Integer& exponent);
Rational pow(const Rational& base, long exponent);

/// (-1)^exponent without materializing a power.
Rational sign_power(const Integer& exponent);

bool is_even(const Integer& v);

/// Converts to long, throwing PreconditionError if it does not fit.
long to_long(const Integer& v);

}  // namespace gfp

#endif  // GFP_RATIONAL_HPP
