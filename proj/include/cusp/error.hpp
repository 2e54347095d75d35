#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cusp {

enum class ErrorKind {
  InvalidPartition,
  InvalidWeight,
  InvalidArgument,
  AmbiguousExpansion,
  ParseError,
  InternalInvariantViolation,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::AmbiguousExpansion: return "AmbiguousExpansion";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cusp
