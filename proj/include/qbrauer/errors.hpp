#pragma once

#include <stdexcept>
#include <string>

namespace qbrauer {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument value: bad site index, bad degree, zero parameter, ...
struct DomainError : Error {
  using Error::Error;
};

// Operands with incompatible rank, degree or shape.
struct ShapeError : Error {
  using Error::Error;
};

// Requested object is undefined at these parameters (forbidden omega,
// pairing operator beyond its last nonzero degree, ...).
struct UndefinedError : Error {
  using Error::Error;
};

// A configured resource cap (word count, dimension) would be exceeded.
struct ResourceError : Error {
  using Error::Error;
};

// Product in a degree-truncated ring would exceed the truncation degree.
struct TruncationError : Error {
  using Error::Error;
};

}  // namespace qbrauer
