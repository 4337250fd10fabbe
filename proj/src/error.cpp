#include "monodisk/error.hpp"

namespace monodisk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::GrooveOutOfRange: return "GrooveOutOfRange";
    case ErrorCode::SelfIntersection: return "SelfIntersection";
    case ErrorCode::InadmissibleEndpoint: return "InadmissibleEndpoint";
    case ErrorCode::PathCollision: return "PathCollision";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::SubdivisionCollision: return "SubdivisionCollision";
    case ErrorCode::SideSelfIntersects: return "SideSelfIntersects";
    case ErrorCode::RotationOverlap: return "RotationOverlap";
    case ErrorCode::WordInvalid: return "WordInvalid";
    case ErrorCode::NotCFamily: return "NotCFamily";
    case ErrorCode::UnrecognizedSpan: return "UnrecognizedSpan";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooMany: return "TooMany";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::CriticalOnlyForN3: return "CriticalOnlyForN3";
    case ErrorCode::FitInconsistent: return "FitInconsistent";
    case ErrorCode::NonInteger: return "NonInteger";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace monodisk
