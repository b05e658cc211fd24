#pragma once

#include <stdexcept>
#include <string>

namespace mirrorpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or case file content.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Exponent matrix or linear system without the required invertibility.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented precondition (non-positive weight, element
/// outside its ambient group, vector outside a lattice, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Point set does not affinely span its ambient space.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Polar duality requested for a polytope whose interior misses the origin.
class OriginNotInteriorError : public Error {
 public:
  using Error::Error;
};

/// A configurable enumeration or search budget was exhausted.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// 64-bit exact arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace mirrorpoly
