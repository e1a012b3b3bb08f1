#include "ordprox/error.hpp"

namespace ordprox {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingReflexivePair: return "MissingReflexivePair";
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::TransitivityViolation: return "TransitivityViolation";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::IncomparablePair: return "IncomparablePair";
    case ErrorCode::InconsistentTriples: return "InconsistentTriples";
    case ErrorCode::TooFewElements: return "TooFewElements";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::UnsupportedGraph: return "UnsupportedGraph";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::CoincidentPoint: return "CoincidentPoint";
    case ErrorCode::InvalidLevel: return "InvalidLevel";
    case ErrorCode::TooFewTriangles: return "TooFewTriangles";
    case ErrorCode::CoincidentCentroid: return "CoincidentCentroid";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::TooFewPointsInFrame: return "TooFewPointsInFrame";
    case ErrorCode::DuplicatePointInFrame: return "DuplicatePointInFrame";
    case ErrorCode::FrameNotFound: return "FrameNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<std::string> subjects)
    : std::runtime_error(std::move(message)), code_(code), subjects_(std::move(subjects)) {}

Error Error::in_frame(std::int64_t frame_id) const {
  Error tagged(code_, "frame " + std::to_string(frame_id) + ": " + what(), subjects_);
  tagged.frame_id_ = frame_id;
  return tagged;
}

}  // namespace ordprox
