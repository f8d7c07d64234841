#pragma once

#include <stdexcept>
#include <string>

namespace pencil {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad expressions, invalid pencils, precondition violations.
class InputError : public Error {
 public:
  using Error::Error;
};

// Arithmetic misuse (division by zero, mixed fields, non-divisibility).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

// A configured computation bound was hit (degree bounds, shear retries).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// A proven structural property failed on concrete data.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace pencil
