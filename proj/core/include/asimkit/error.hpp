#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asimkit {

// Base of every exception thrown by the library. Negative results (a failed
// check, a counterexample, an absent synthesis) are values, never errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Malformed model/relation documents, dangling or duplicate world references.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Unbound free variables, vocabulary mismatches during evaluation.
class EvalError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace asimkit
