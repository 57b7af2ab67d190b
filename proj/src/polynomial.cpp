#include "gfp/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "gfp/errors.hpp"

namespace gfp {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::lc() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  const Rational inv = Rational(1) / lc();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  // lc(a)*lc(b) != 0 over a field, so the result is already canonical.
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

DegreeLc degree_lc(const Polynomial& p) { return {p.degree(), p.lc()}; }

Polynomial derivative(const Polynomial& p) { return p.derivative(); }

Rational evaluate(const Polynomial& p, const Rational& at) { return p.evaluate(at); }

DivRem divrem(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
  const std::size_t dq = *q.degree();
  if (p.is_zero() || *p.degree() < dq) return {Polynomial{}, p};

  std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
  const std::size_t dp = rem.size() - 1;
  std::vector<Rational> quo(dp - dq + 1);
  const Rational inv_lc = Rational(1) / q.lc();
  auto qc = q.coefficients();
  for (std::size_t k = dp - dq + 1; k-- > 0;) {
    const Rational& top = rem[k + dq];
    if (top.is_zero()) continue;
    Rational factor = top * inv_lc;
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= factor * qc[j];
    quo[k] = std::move(factor);
  }
  rem.resize(dq);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  Polynomial a = p.monic();
  Polynomial b = q.monic();
  while (!b.is_zero()) {
    Polynomial r = divrem(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool divides(const Polynomial& q, const Polynomial& p) { return divrem(p, q).remainder.is_zero(); }

}  // namespace gfp
