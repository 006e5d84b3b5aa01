#pragma once

#include <stdexcept>
#include <string>

namespace coringlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The radical / simple-module machinery has no method for this field and size.
struct UnsupportedField : Error {
  using Error::Error;
};

/// A map on an ambient tensor does not descend to the balanced quotient.
struct NotBalanced : Error {
  using Error::Error;
};

/// A kernel that should be a submodule is not closed under the actions.
struct NotStable : Error {
  using Error::Error;
};

struct NotFirm : Error {
  using Error::Error;
};

struct UnitRequired : Error {
  using Error::Error;
};

struct DiagramFailure : Error {
  using Error::Error;
};

struct FactorizationFailure : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& message)
      : Error("parse error at line " + std::to_string(line) + ": " + message), line(line) {}
  std::size_t line;
};

struct ValidationError : Error {
  ValidationError(std::string object, const std::string& message)
      : Error("validation error in '" + object + "': " + message), object(std::move(object)) {}
  std::string object;
};

}  // namespace coringlab
