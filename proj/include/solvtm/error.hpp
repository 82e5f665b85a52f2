#pragma once

#include <stdexcept>
#include <string>

namespace solvtm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (wrong size, zero input...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Numerical root data could not be certified at the requested accuracy.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (matrix files, factor expressions).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace solvtm
