#pragma once

#include <stdexcept>
#include <string>

namespace kas3 {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error object.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed input document (JSON shape, unknown fields, bad literals).
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message) : Error("schema", message) {}
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error("precondition", message) {}
};

/// An explicit size guard was exceeded; nothing is truncated silently.
class GuardExceeded : public Error {
 public:
  explicit GuardExceeded(const std::string& message) : Error("guard", message) {}
};

/// A shipped construction failed its own certification.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error("internal", message) {}
};

}  // namespace kas3
