#pragma once

#include <stdexcept>
#include <string>

namespace polymix {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different ambient dimensions, or arity does not match.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Malformed value: empty point list, zero direction, non-primitive lattice
/// vector, negative scale factor, index out of range, bad rational literal.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// A halfspace system with no feasible point.
class EmptyRegion : public Error {
 public:
  explicit EmptyRegion(const std::string& what) : Error(what) {}
};

/// A halfspace system with a nonzero recession direction.
class UnboundedRegion : public Error {
 public:
  explicit UnboundedRegion(const std::string& what) : Error(what) {}
};

/// Geometry that violates a precondition: degenerate measure tuple,
/// lower-dimensional Newton polytope where full dimension is required,
/// containment assumptions that fail.
class DegenerateGeometry : public Error {
 public:
  explicit DegenerateGeometry(const std::string& what) : Error(what) {}
};

}  // namespace polymix
