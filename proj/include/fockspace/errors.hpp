#pragma once

#include <stdexcept>
#include <string>

namespace fockspace {

/// Two objects built for different weights were combined.
class ParameterMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DuplicateLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input document. `where` is a JSON pointer or a "line N" location.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// An experiment was requested whose preconditions do not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fockspace
