#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legendrian {

enum class ErrorCode {
  InvalidDiagram,
  NotRealizable,
  NonCoprime,
  NotNormalized,
  OutOfDomain,
  TemplateMismatch,
  Unsupported,
  CurvesIntersect,
  FloorTooShallow,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code is the machine-readable part.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::TemplateMismatch: return "TemplateMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::CurvesIntersect: return "CurvesIntersect";
    case ErrorCode::FloorTooShallow: return "FloorTooShallow";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace legendrian
