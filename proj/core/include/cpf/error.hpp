#pragma once

#include <stdexcept>
#include <string>

namespace cpf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different variable registries.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text, braid text or fixture line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Domain/codomain disagreement between linear maps, or a bad tensor position.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A substitution that would need to invert a non-unit.
class SubstitutionError : public Error {
 public:
  using Error::Error;
};

/// A coloring that is not constant on some closure component.
class ColoringError : public Error {
 public:
  using Error::Error;
};

/// Raised when an identity that holds for every valid input fails anyway.
/// Seeing one means a convention bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpf
