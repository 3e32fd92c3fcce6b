#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A word or generator lies outside the domain an order or map is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

class OrderDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands live over different fields") {}
};

class EmptyPolynomial : public Error {
 public:
  EmptyPolynomial() : Error("operation undefined on the zero polynomial") {}
};

/// The hypothesis of the subalphabet restriction does not hold.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// A relation fails under divided-power evaluation.
class OracleViolation : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed: non-reduced basis, non-terminating
/// splitting, ambiguous factorisation.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace ncalg
