#pragma once

#include <stdexcept>
#include <string>

namespace trivex {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource limit (enumeration cap, dense-size cap, iteration
// cap, search budget) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Caller supplied input outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A structural self-check failed. Results computed past this point cannot be
// trusted, so it is never caught inside the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

// An iterative method stopped before meeting its tolerance.
class NotConverged : public Error {
 public:
  using Error::Error;
};

}  // namespace trivex
