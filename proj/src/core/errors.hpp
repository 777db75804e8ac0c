#pragma once

#include <stdexcept>
#include <string>

namespace catcomb {

// Error taxonomy used across the library.
//
//   ParseError    - malformed textual input (bad character, bad structure)
//   DomainError   - structurally valid input outside an operation's domain
//                   (e.g. a walk that is not a Dyck path, an out-of-range
//                   class index, a mark set violating a family constraint)
//   UnknownName   - unregistered statistic / family / bijection / identity
//   BoundsError   - size request beyond the documented desk-scale bound
//   InternalError - invariant violation inside the library (e.g. an inexact
//                   division in a closed-form evaluator); always a bug
enum class ErrorCode {
  ParseError,
  DomainError,
  UnknownName,
  BoundsError,
  InternalError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return "parse error";
    case ErrorCode::DomainError:
      return "domain error";
    case ErrorCode::UnknownName:
      return "unknown name";
    case ErrorCode::BoundsError:
      return "bounds error";
    case ErrorCode::InternalError:
      return "internal error";
  }
  return "error";
}

}  // namespace catcomb
