#pragma once

#include <stdexcept>
#include <string>

namespace gbessel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range parameter,
/// non-normalized function, non-finite input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical guard tripped: self-intersecting target curve, a point
/// sitting on a curve, quadrature that did not converge.
class NumericGuard : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range scenario configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gbessel
