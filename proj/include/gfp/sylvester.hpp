#ifndef GFP_SYLVESTER_HPP
#define GFP_SYLVESTER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gfp/polynomial.hpp"
#include "gfp/rational.hpp"

namespace gfp {

/// Square matrix of shifted coefficient rows. For deg P = n and deg Q = m,
/// the first m rows hold P (row i starts at column i, highest power
/// first) and the last n rows hold Q the same way.
class SylvesterMatrix {
 public:
  SylvesterMatrix(const Polynomial& p, const Polynomial& q);

  std::size_t dimension() const { return dim_; }
  std::size_t deg_p() const { return deg_p_; }
  std::size_t deg_q() const { return deg_q_; }
  const Polynomial& p() const { return p_; }
  const Polynomial& q() const { return q_; }

  const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  const std::vector<Rational>& entries() const { return entries_; }

  /// One row per line, tab-separated exact rationals.
  std::string debug_string() const;

 private:
  Polynomial p_;
  Polynomial q_;
  std::size_t deg_p_;
  std::size_t deg_q_;
  std::size_t dim_;
  std::vector<Rational> entries_;
};

/// Exact determinant of a row-major square matrix of rationals. Each row
/// is scaled to integers, then reduced by single-step Bareiss elimination
/// with first-nonzero pivoting. Every Bareiss division is checked for
/// exactness and a failure throws InternalError.
Rational det_fraction_free(std::vector<Rational> entries, std::size_t dimension);
Rational det_fraction_free(const SylvesterMatrix& m);

/// Res(P, Q). A constant argument k gives k^(degree of the other); two
/// constants give 1. Throws ZeroPolynomialError if either is zero.
Rational resultant(const Polynomial& p, const Polynomial& q);

/// (-1)^(n(n-1)/2) lc(P)^-1 Res(P, P'), n = deg P >= 1.
Rational discriminant(const Polynomial& p);

}  // namespace gfp

#endif  // GFP_SYLVESTER_HPP
