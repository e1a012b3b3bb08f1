#include "ordprox/frames.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "ordprox/error.hpp"
#include "ordprox/nerve.hpp"

namespace ordprox {

const Frame& FrameSet::find(FrameId id) const {
  auto it = std::lower_bound(frames.begin(), frames.end(), id,
                             [](const Frame& f, FrameId v) { return f.id < v; });
  if (it == frames.end() || it->id != id) {
    throw Error(ErrorCode::FrameNotFound, "frame " + std::to_string(id) + " not found",
                {std::to_string(id)});
  }
  return *it;
}

std::string_view to_string(MeasureKind kind) {
  return kind == MeasureKind::Area ? "area" : "length";
}

MeasureKind parse_measure_kind(std::string_view text) {
  if (text == "area") return MeasureKind::Area;
  if (text == "length") return MeasureKind::Length;
  throw Error(ErrorCode::UnknownFormat, "unknown measure '" + std::string(text) + "'",
              {std::string(text)});
}

std::string FramePairRecord::label() const {
  return "f" + std::to_string(frame_id) + "_m" + std::to_string(feature_id);
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_whole(std::string_view text, T& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

Error malformed(std::size_t line, const std::string& why) {
  return Error(ErrorCode::MalformedRow, "line " + std::to_string(line) + ": " + why,
               {std::to_string(line)});
}

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

FrameSet ingest_frames(std::istream& csv) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::map<FrameId, std::vector<Point2>> grouped;
  while (std::getline(csv, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty()) continue;
    if (!header_seen) {
      if (row != "frame_id,x,y") throw malformed(line_no, "expected header 'frame_id,x,y'");
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= row.size(); ++i) {
      if (i == row.size() || row[i] == ',') {
        fields.push_back(row.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 3) throw malformed(line_no, "expected 3 fields");
    FrameId id = 0;
    Point2 p;
    if (!parse_whole(fields[0], id)) throw malformed(line_no, "frame_id is not an integer");
    if (!parse_whole(fields[1], p.x) || !std::isfinite(p.x))
      throw malformed(line_no, "x is not a finite number");
    if (!parse_whole(fields[2], p.y) || !std::isfinite(p.y))
      throw malformed(line_no, "y is not a finite number");
    grouped[id].push_back(p);
  }
  if (!header_seen) throw malformed(line_no + 1, "missing header 'frame_id,x,y'");

  FrameSet out;
  for (auto& [id, points] : grouped) {
    if (points.size() < 3) {
      throw Error(ErrorCode::TooFewPointsInFrame,
                  "frame " + std::to_string(id) + " has " + std::to_string(points.size()) +
                      " points; at least 3 are required",
                  {std::to_string(id)});
    }
    std::set<std::pair<double, double>> seen;
    for (const auto& p : points) {
      if (!seen.emplace(p.x, p.y).second) {
        throw Error(ErrorCode::DuplicatePointInFrame,
                    "frame " + std::to_string(id) + " repeats point (" + exact(p.x) + ", " +
                        exact(p.y) + ")",
                    {std::to_string(id)});
      }
    }
    out.frames.push_back({id, std::move(points)});
  }
  return out;
}

FrameSet ingest_frames_text(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  return ingest_frames(in);
}

std::string frames_to_csv(const FrameSet& frames) {
  std::string out = "frame_id,x,y\n";
  for (const auto& f : frames.frames)
    for (const auto& p : f.points)
      out += std::to_string(f.id) + "," + exact(p.x) + "," + exact(p.y) + "\n";
  return out;
}

FrameSet generate_frames(std::size_t frames, std::size_t points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // 53 random mantissa bits; mt19937_64 output is fully specified, unlike the
  // standard distributions.
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  FrameSet out;
  for (std::size_t f = 0; f < frames; ++f) {
    Frame frame{static_cast<FrameId>(f + 1), {}};
    std::set<std::pair<double, double>> seen;
    while (frame.points.size() < points) {
      Point2 p{unit(), unit()};
      if (seen.emplace(p.x, p.y).second) frame.points.push_back(p);
    }
    out.frames.push_back(std::move(frame));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chains

OrderedChain make_chain(MeasureKind kind, std::vector<FramePairRecord> records,
                        std::vector<SkippedFeature> skipped) {
  std::stable_sort(records.begin(), records.end(),
                   [](const FramePairRecord& a, const FramePairRecord& b) {
                     return std::tie(a.measure, a.frame_id, a.feature_id) <
                            std::tie(b.measure, b.frame_id, b.feature_id);
                   });
  return {kind, std::move(records), std::move(skipped)};
}

namespace {

Triangulation triangulate_frame(const Frame& frame, const GeometryOptions& options) {
  try {
    return delaunay(frame.points, options);
  } catch (const Error& e) {
    throw e.in_frame(frame.id);
  }
}

}  // namespace

OrderedChain order_by_mnc_area(const FrameSet& frames, const GeometryOptions& options) {
  std::vector<FramePairRecord> records;
  for (const auto& frame : frames.frames) {
    const auto tri = triangulate_frame(frame, options);
    const auto mncs = find_mncs(tri);
    for (std::size_t j = 0; j < mncs.size(); ++j) {
      records.push_back({frame.id, j + 1, mnc_area(tri, mncs[j]), MeasureKind::Area});
    }
  }
  return make_chain(MeasureKind::Area, std::move(records));
}

OrderedChain order_by_cycle_length(const FrameSet& frames, const GeometryOptions& options) {
  std::vector<FramePairRecord> records;
  std::vector<SkippedFeature> skipped;
  for (const auto& frame : frames.frames) {
    const auto tri = triangulate_frame(frame, options);
    const auto mncs = find_mncs(tri);
    for (std::size_t j = 0; j < mncs.size(); ++j) {
      if (mncs[j].triangles.size() < 3) {
        skipped.push_back({frame.id, j + 1,
                           "TooFewTriangles: MNC has " +
                               std::to_string(mncs[j].triangles.size()) + " triangles"});
        continue;
      }
      try {
        const auto cycle = maximal_cycle(tri, spoke_complex(tri, mncs[j], 1));
        records.push_back({frame.id, j + 1, cycle.length, MeasureKind::Length});
      } catch (const Error& e) {
        throw e.in_frame(frame.id);
      }
    }
  }
  return make_chain(MeasureKind::Length, std::move(records), std::move(skipped));
}

OrderedChain order_frames(const FrameSet& frames, MeasureKind kind,
                          const GeometryOptions& options) {
  return kind == MeasureKind::Area ? order_by_mnc_area(frames, options)
                                   : order_by_cycle_length(frames, options);
}

DirectedGraph chain_graph(const OrderedChain& chain) {
  DirectedGraph g;
  for (const auto& r : chain.records) g.ensure_vertex(r.label());
  for (std::size_t i = 0; i + 1 < chain.records.size(); ++i) {
    const auto& from = chain.records[i];
    const auto& to = chain.records[i + 1];
    g.add_edge(i, i + 1, to.measure / from.measure);
  }
  return g;
}

DirectedGraph frame_subgraph(const OrderedChain& chain, FrameId frame) {
  const auto& x = chain.records;
  const std::size_t n = x.size();
  DirectedGraph g;
  bool found = false;
  auto link = [&](std::size_t i) {
    const auto from = g.ensure_vertex(x[i].label());
    const auto to = g.ensure_vertex(x[i + 1].label());
    g.add_edge(from, to, x[i + 1].measure / x[i].measure);
  };
  for (std::size_t ind = 0; ind < n; ++ind) {
    if (x[ind].frame_id != frame) continue;
    found = true;
    if (n == 1) {
      g.ensure_vertex(x[ind].label());
    } else if (ind == 0) {
      link(ind);
    } else if (ind == n - 1) {
      link(ind - 1);
    } else {
      link(ind - 1);
      link(ind);
    }
  }
  if (!found) {
    throw Error(ErrorCode::FrameNotFound,
                "frame " + std::to_string(frame) + " has no records on the chain",
                {std::to_string(frame)});
  }
  return g;
}

std::string chain_to_csv(const OrderedChain& chain) {
  std::string out = "rank,frame_id,feature_id,measure\n";
  char buf[40];
  for (std::size_t i = 0; i < chain.records.size(); ++i) {
    const auto& r = chain.records[i];
    std::snprintf(buf, sizeof buf, "%.9g", r.measure);
    out += std::to_string(i + 1) + "," + std::to_string(r.frame_id) + "," +
           std::to_string(r.feature_id) + "," + buf + "\n";
  }
  return out;
}

TotalOrder distinct_measure_order(const OrderedChain& chain) {
  std::vector<ElementId> ascending;
  for (std::size_t i = 0; i < chain.records.size(); ++i) {
    if (i > 0 && chain.records[i].measure == chain.records[i - 1].measure) continue;
    ascending.push_back(exact(chain.records[i].measure));
  }
  return total_order_from_sequence(ascending);
}

}  // namespace ordprox
