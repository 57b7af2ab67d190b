#include "gfp/sylvester.hpp"

#include <sstream>
#include <utility>

#include "gfp/errors.hpp"

namespace gfp {

SylvesterMatrix::SylvesterMatrix(const Polynomial& p, const Polynomial& q) : p_(p), q_(q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError("Sylvester matrix of the zero polynomial");
  deg_p_ = *p.degree();
  deg_q_ = *q.degree();
  dim_ = deg_p_ + deg_q_;
  if (dim_ == 0) throw PreconditionError("Sylvester matrix of two constants is empty");

  entries_.assign(dim_ * dim_, Rational(0));
  for (std::size_t row = 0; row < deg_q_; ++row) {
    for (std::size_t k = 0; k <= deg_p_; ++k) entries_[row * dim_ + row + k] = p.coeff(deg_p_ - k);
  }
  for (std::size_t i = 0; i < deg_p_; ++i) {
    const std::size_t row = deg_q_ + i;
    for (std::size_t k = 0; k <= deg_q_; ++k) entries_[row * dim_ + i + k] = q.coeff(deg_q_ - k);
  }
}

std::string SylvesterMatrix::debug_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c) os << '\t';
      os << at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

Rational det_fraction_free(std::vector<Rational> entries, std::size_t n) {
  if (entries.size() != n * n) throw PreconditionError("determinant of a non-square matrix");
  if (n == 0) return Rational(1);

  // Clear denominators row by row; det(M) = det(scaled) / prod(scale).
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      const Integer den = entries[r * n + c].denominator();
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& e = entries[r * n + c];
      a[r * n + c] = e.numerator() * (row_lcm / e.denominator());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[pivot * n + c]);
      sign = -sign;
    }
    const Integer& pk = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = pk * a[i * n + j] - a[i * n + k] * a[k * n + j];
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t())) {
          throw InternalError("Bareiss elimination produced a non-exact division at step " + std::to_string(k));
        }
        mpz_divexact(a[i * n + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pk;
  }
  Integer det = a[n * n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

Rational det_fraction_free(const SylvesterMatrix& m) { return det_fraction_free(m.entries(), m.dimension()); }

Rational resultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError("resultant with the zero polynomial is undefined");
  if (p.is_constant() && q.is_constant()) return Rational(1);
  if (p.is_constant()) return pow(p.lc(), static_cast<long>(*q.degree()));
  if (q.is_constant()) return pow(q.lc(), static_cast<long>(*p.degree()));
  return det_fraction_free(SylvesterMatrix(p, q));
}

Rational discriminant(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("discriminant of the zero polynomial");
  if (p.is_constant()) throw PreconditionError("discriminant needs a polynomial of degree >= 1");
  const auto n = static_cast<long>(*p.degree());
  Rational sign = (n * (n - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * resultant(p, p.derivative()) / p.lc();
}

}  // namespace gfp
