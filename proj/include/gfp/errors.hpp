#ifndef GFP_ERRORS_HPP
#define GFP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gfp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or rational text.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An operation received the zero polynomial where it is undefined
/// (resultant, Sylvester matrix, discriminant).
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain (n < 1, r >= m, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A closed form was asked for a family whose constants do not satisfy
/// the formula's hypothesis (e.g. non-constant g).
class HypothesisViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Fibonacci-type family passed where a Lucas-type one is required, or
/// vice versa.
class WrongKind : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Two families that do not share d and g were used as a conjugate pair.
class NotConjugate : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NoConjugate : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

/// Raised when an exact computation that must divide evenly does not.
/// Seeing one means a bug or a misapplied formula, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gfp

#endif  // GFP_ERRORS_HPP
