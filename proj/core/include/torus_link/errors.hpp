#pragma once

#include <stdexcept>
#include <string>

namespace torus_link {

// Every failure mode of the library. The CLI maps these to structured JSON
// error objects; tests match on the code, never on message text.
enum class ErrorCode {
  Collinear,
  IntersectingCurves,
  SameCircle,
  NotHomologicallyTrivial,
  DegreeOverflow,
  DegreeUnderflow,
  DegreeMismatch,
  ZeroFrequency,
  DomainError,
  Degenerate,
  PersistentDegeneracy,
  IdenticalCircles,
  IntersectingLifts,
  ParseError,
  ValidationError,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Collinear: return "Collinear";
    case ErrorCode::IntersectingCurves: return "IntersectingCurves";
    case ErrorCode::SameCircle: return "SameCircle";
    case ErrorCode::NotHomologicallyTrivial: return "NotHomologicallyTrivial";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::DegreeUnderflow: return "DegreeUnderflow";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroFrequency: return "ZeroFrequency";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::PersistentDegeneracy: return "PersistentDegeneracy";
    case ErrorCode::IdenticalCircles: return "IdenticalCircles";
    case ErrorCode::IntersectingLifts: return "IntersectingLifts";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace torus_link
