#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordprox {

enum class ErrorCode {
  // order-core
  MissingReflexivePair,
  AntisymmetryViolation,
  TransitivityViolation,
  UnknownElement,
  DuplicateElement,
  IncomparablePair,
  InconsistentTriples,
  TooFewElements,
  DegenerateTriple,
  // proximity
  NotComparable,
  // graph
  UnsupportedGraph,
  UnknownFormat,
  // geometry
  TooFewPoints,
  DuplicatePoint,
  AllCollinear,
  CoincidentPoint,
  // nerve
  InvalidLevel,
  TooFewTriangles,
  CoincidentCentroid,
  // frames
  MalformedRow,
  TooFewPointsInFrame,
  DuplicatePointInFrame,
  FrameNotFound,
  // input decoding / filesystem
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library surfaces as this exception. `subjects` names
/// the offending elements (ids, frame numbers, line numbers) in the order the
/// error kind documents them, so callers can render or test them without
/// parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::string> subjects = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& subjects() const noexcept { return subjects_; }
  std::optional<std::int64_t> frame_id() const noexcept { return frame_id_; }

  /// Copy of this error attributed to a video frame.
  Error in_frame(std::int64_t frame_id) const;

  /// True for errors caused by the filesystem rather than the input content.
  bool is_io() const noexcept { return code_ == ErrorCode::IoError; }

 private:
  ErrorCode code_;
  std::vector<std::string> subjects_;
  std::optional<std::int64_t> frame_id_;
};

}  // namespace ordprox
