#pragma once

#include <stdexcept>
#include <string>

namespace fxc {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition (bad file, bad parameter).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The numbers are well-formed but the requested quantity does not exist,
// e.g. a zero fluctuation in a denominator.
class DegenerateFluctuation : public Error {
 public:
  using Error::Error;
};

}  // namespace fxc
