#pragma once

#include <stdexcept>
#include <string>

namespace wreathfock {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad generators, group mismatch,
/// non-homomorphisms, indices out of range.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured element cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace wreathfock
