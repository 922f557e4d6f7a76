#pragma once

#include <stdexcept>
#include <string>

namespace qaff {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an invariant needs denominator data that the type does not have.
class NoProviderError : public Error {
 public:
  using Error::Error;
};

/// Raised for inputs that are well formed but outside the supported scope.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace qaff
