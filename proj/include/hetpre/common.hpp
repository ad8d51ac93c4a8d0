#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hetpre {

using Index = std::int64_t;

// Error categories map 1:1 to CLI exit codes (see tools/).
enum class ErrorKind {
  InvalidArgument,  // bad parameter, id out of range, precondition violation
  Format,           // malformed input file
  DimMismatch,      // tensor/label/graph shape disagreement
  Numeric,          // non-finite value where a finite one is required
  Io,               // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Format: return "format";
    case ErrorKind::DimMismatch: return "dim-mismatch";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace hetpre
