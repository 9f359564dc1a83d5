#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsing {

enum class ErrorCode {
  NotStrictlyConvexOrNotSmooth,
  OriginNotInterior,
  NotOnBoundary,
  LengthOutOfRange,
  ShapeMismatch,
  ParallelNormals,
  EmptyIntersection,
  EmptyInterior,
  NoProperOverlap,
  HypothesisViolated,
  InvalidArrangement,
  InvalidArcBody,
  UnknownScenario,
  GenerationExhausted,
  BadInput,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotStrictlyConvexOrNotSmooth: return "NotStrictlyConvexOrNotSmooth";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParallelNormals: return "ParallelNormals";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::NoProperOverlap: return "NoProperOverlap";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InvalidArrangement: return "InvalidArrangement";
    case ErrorCode::InvalidArcBody: return "InvalidArcBody";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

// Every failure raised by the library carries a machine-readable code.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tsing
