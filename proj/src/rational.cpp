#include "gfp/rational.hpp"

#include <cctype>
#include <ostream>

#include "gfp/errors.hpp"

namespace gfp {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  }
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(Integer(num_s));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) {
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  }
  return Rational(Integer(num_s), Integer(std::string(den)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, const Integer& exponent) {
  if (exponent < 0 && base.is_zero()) throw DivisionByZero("zero raised to a negative power");
  Integer e = abs(exponent);
  if (!e.fits_ulong_p()) throw PreconditionError("exponent too large: " + exponent.get_str());
  unsigned long k = e.get_ui();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), k);
  return exponent < 0 ? Rational(den, num) : Rational(num, den);
}

Rational pow(const Rational& base, long exponent) { return pow(base, Integer(exponent)); }

Rational sign_power(const Integer& exponent) { return is_even(exponent) ? Rational(1) : Rational(-1); }

bool is_even(const Integer& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw PreconditionError("integer out of range: " + v.get_str());
  return v.get_si();
}

}  // namespace gfp
