#pragma once

#include <stdexcept>
#include <string>

namespace boolcum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands of a binary operation have different matrix dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands of a binary operation have different truncation orders.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// An index, size or parameter lies outside its admissible range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace boolcum
