#pragma once

// Frame-level pipeline: per-frame keypoints are triangulated, their maximal
// nuclear clusters (or 1-maximal cycles) measured, and every (frame, feature)
// pair placed on one chain sorted by measure. Adjacency on that chain is the
// induced proximity; the chain graph and per-frame subgraphs expose it.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ordprox/geometry.hpp"
#include "ordprox/graph.hpp"
#include "ordprox/order.hpp"

namespace ordprox {

using FrameId = std::int64_t;

struct Frame {
  FrameId id = 0;
  std::vector<Point2> points;
};

/// Frames in ascending id order; ids unique, each frame has >= 3 distinct points.
struct FrameSet {
  std::vector<Frame> frames;

  /// Throws FrameNotFound.
  const Frame& find(FrameId id) const;
};

enum class MeasureKind { Area, Length };

std::string_view to_string(MeasureKind kind);
/// Accepts "area" or "length"; anything else throws UnknownFormat.
MeasureKind parse_measure_kind(std::string_view text);

struct FramePairRecord {
  FrameId frame_id = 0;
  /// 1-based MNC index within the frame (MNCs ordered by nucleus index).
  std::size_t feature_id = 0;
  double measure = 0.0;
  MeasureKind kind = MeasureKind::Area;

  /// "f<frame>_m<feature>"
  std::string label() const;
};

struct SkippedFeature {
  FrameId frame_id = 0;
  std::size_t feature_id = 0;
  std::string reason;
};

/// Records ascending by (measure, frame_id, feature_id).
struct OrderedChain {
  MeasureKind kind = MeasureKind::Area;
  std::vector<FramePairRecord> records;
  /// Features left off the chain, with the reason.
  std::vector<SkippedFeature> skipped;
};

/// Reads `frame_id,x,y` CSV (header required). Throws MalformedRow (subject:
/// line number), TooFewPointsInFrame or DuplicatePointInFrame (subject: frame).
FrameSet ingest_frames(std::istream& csv);
FrameSet ingest_frames_text(std::string_view csv);

/// `frame_id,x,y` CSV with coordinates printed for exact round trip.
std::string frames_to_csv(const FrameSet& frames);

/// Seeded synthetic keypoints: `points` uniform points in the unit square per
/// frame, frame ids 1..frames. Bit-identical for a given seed on any platform.
FrameSet generate_frames(std::size_t frames, std::size_t points, std::uint64_t seed);

/// Sorts records into chain order.
OrderedChain make_chain(MeasureKind kind, std::vector<FramePairRecord> records,
                        std::vector<SkippedFeature> skipped = {});

/// Frame-MNC pairs ordered by MNC area. Geometry errors carry the frame id.
OrderedChain order_by_mnc_area(const FrameSet& frames, const GeometryOptions& options = {});

/// Frame-MNC pairs ordered by the perimeter of the MNC's 1-maximal cycle.
/// MNCs with fewer than 3 triangles are listed in `skipped`.
OrderedChain order_by_cycle_length(const FrameSet& frames, const GeometryOptions& options = {});

OrderedChain order_frames(const FrameSet& frames, MeasureKind kind,
                          const GeometryOptions& options = {});

/// Directed path over the chain; edge x_i -> x_{i+1} weighted
/// measure(x_{i+1}) / measure(x_i).
DirectedGraph chain_graph(const OrderedChain& chain);

/// Union, over the chain records of frame `frame`, of each record's chain
/// neighbourhood (predecessor edge and successor edge where they exist).
/// Throws FrameNotFound.
DirectedGraph frame_subgraph(const OrderedChain& chain, FrameId frame);

/// `rank,frame_id,feature_id,measure` CSV, rank 1-based, measure to 9
/// significant digits.
std::string chain_to_csv(const OrderedChain& chain);

/// Total order on the distinct measures of a chain, elements named by the
/// measure printed to 17 significant digits.
TotalOrder distinct_measure_order(const OrderedChain& chain);

}  // namespace ordprox
