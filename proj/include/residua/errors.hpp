#pragma once

#include <stdexcept>
#include <string>

namespace residua {

// Base for every precondition violation raised by the library. The CLI maps
// all of these to exit code 2.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

}  // namespace residua
