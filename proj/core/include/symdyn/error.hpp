#pragma once

#include <stdexcept>
#include <string>

namespace symdyn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown symbols, bad shapes, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace symdyn
