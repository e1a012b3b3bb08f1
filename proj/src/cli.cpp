#include "ordprox/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordprox/error.hpp"
#include "ordprox/frames.hpp"
#include "ordprox/graph.hpp"
#include "ordprox/io.hpp"
#include "ordprox/nerve.hpp"
#include "ordprox/proximity.hpp"

namespace ordprox::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Outputs {
  std::string primary;
  std::string graph;  // written to --graph when set
  int code = kOk;
};

const Frame& select_frame(const FrameSet& frames, const std::optional<FrameId>& wanted) {
  if (wanted) return frames.find(*wanted);
  if (frames.frames.size() != 1) {
    throw Error(ErrorCode::ParseError,
                "input holds " + std::to_string(frames.frames.size()) +
                    " frames; choose one with --frame");
  }
  return frames.frames.front();
}

ojson point_json(const Point2& p) { return ojson::array({p.x, p.y}); }

ojson triangle_list(const std::vector<std::size_t>& ids) {
  ojson out = ojson::array();
  for (auto t : ids) out.push_back(t);
  return out;
}

void check_graph_format(const std::string& format) {
  if (format != "dot" && format != "json") {
    throw Error(ErrorCode::UnknownFormat, "unknown graph format '" + format + "'", {format});
  }
}

int exit_code_for(const Error& e) { return e.is_io() ? kIo : kValidation; }

void report_error(std::ostream& err, const Error& e) {
  ojson doc;
  doc["error"] = std::string(to_string(e.code()));
  doc["message"] = e.what();
  doc["subjects"] = e.subjects();
  if (e.frame_id()) doc["frame_id"] = *e.frame_id();
  doc["exit_code"] = exit_code_for(e);
  err << doc.dump() << "\n";
}

void report_usage(std::ostream& err, const std::string& message) {
  ojson doc;
  doc["error"] = "Usage";
  doc["message"] = message;
  doc["subjects"] = ojson::array();
  doc["exit_code"] = static_cast<int>(kUsage);
  err << doc.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order-induced proximities, Hasse diagrams and triangulation frame chains",
               "ordprox"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output;
  double epsilon = GeometryOptions{}.epsilon;
  app.add_option("-o,--output", output, "Write the primary output to this file");
  app.add_option("--epsilon", epsilon, "Geometric predicate tolerance")
      ->check(CLI::PositiveNumber);

  std::string order_path, points_path, format = "dot", by = "area", graph_path;
  std::string report_format = "text", elem_a, elem_b;
  std::optional<FrameId> frame;
  std::size_t max_k = 1, level_k = 1, n_frames = 10, n_points = 30;
  std::uint64_t seed = 1;

  std::function<Outputs()> action;

  auto* check = app.add_subcommand("check", "Validate an order and report proximity properties");
  check->add_option("order", order_path, "Order spec JSON")->required();
  check->add_option("--format", report_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->callback([&] {
    action = [&] {
      const auto space = parse_order_spec(read_file(order_path));
      const auto report = check_properties(space);
      Outputs o;
      o.primary = report_format == "json" ? report_to_json(report) + "\n" : report_to_text(report);
      o.code = report.all_hold() ? kOk : kCheckFailed;
      return o;
    };
  });

  auto* near_cmd = app.add_subcommand("near", "Induced proximity between two elements");
  near_cmd->add_option("order", order_path, "Order spec JSON")->required();
  near_cmd->add_option("a", elem_a, "First element")->required();
  near_cmd->add_option("b", elem_b, "Second element")->required();
  near_cmd->callback([&] {
    action = [&] {
      const auto space = parse_order_spec(read_file(order_path));
      const auto& ids = elements_of(space);
      const auto verdict = near(space, ids.index_of(elem_a), ids.index_of(elem_b));
      ojson doc;
      doc["a"] = elem_a;
      doc["b"] = elem_b;
      doc["verdict"] = std::string(to_string(verdict));
      auto value = numeric_value(verdict);
      doc["value"] = value ? ojson(*value) : ojson(nullptr);
      return Outputs{doc.dump() + "\n", "", kOk};
    };
  });

  auto add_graph_command = [&](const char* name, const char* help,
                               DirectedGraph (*build)(const OrderSpace&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("order", order_path, "Order spec JSON")->required();
    cmd->add_option("--format", format, "dot or json");
    cmd->callback([&, build] {
      action = [&, build] {
        check_graph_format(format);
        const auto space = parse_order_spec(read_file(order_path));
        return Outputs{export_graph(build(space), format) + (format == "json" ? "\n" : ""), "",
                       kOk};
      };
    });
  };
  add_graph_command("hasse", "Emit the Hasse diagram", &hasse);
  add_graph_command("prox", "Emit the induced proximity graph", &proximity_graph);

  auto* equiv = app.add_subcommand("equiv", "Compare proximity graph and Hasse diagram");
  equiv->add_option("order", order_path, "Order spec JSON")->required();
  equiv->callback([&] {
    action = [&] {
      const auto report = check_equivalence(parse_order_spec(read_file(order_path)));
      Outputs o;
      if (report.equivalent) {
        o.primary = "equivalent\n";
        return o;
      }
      o.code = kCheckFailed;
      o.primary = "not equivalent\n";
      if (!report.same_vertices) o.primary += "vertex sets differ\n";
      for (const auto& [a, b] : report.only_in_proximity)
        o.primary += "+ " + a + " -> " + b + " (proximity only)\n";
      for (const auto& [a, b] : report.only_in_hasse)
        o.primary += "- " + a + " -> " + b + " (hasse only)\n";
      return o;
    };
  });

  auto add_points_input = [&](CLI::App* cmd) {
    cmd->add_option("points", points_path, "Points CSV (frame_id,x,y)")->required();
    cmd->add_option("--frame", frame, "Frame to use when the file holds several");
  };

  auto* triangulate = app.add_subcommand("triangulate", "Delaunay triangulation as JSON");
  add_points_input(triangulate);
  triangulate->callback([&] {
    action = [&] {
      const auto frames = ingest_frames_text(read_file(points_path));
      const auto& f = select_frame(frames, frame);
      const auto tri = delaunay(f.points, {epsilon});
      ojson doc;
      doc["frame_id"] = f.id;
      doc["points"] = ojson::array();
      for (const auto& p : tri.points) doc["points"].push_back(point_json(p));
      doc["triangles"] = ojson::array();
      for (const auto& t : tri.triangles) doc["triangles"].push_back(t.v);
      return Outputs{doc.dump() + "\n", "", kOk};
    };
  });

  auto* mnc = app.add_subcommand("mnc", "Maximal nuclear clusters, areas and spoke complexes");
  add_points_input(mnc);
  mnc->add_option("--max-k", max_k, "Highest spoke level to emit")->check(CLI::PositiveNumber);
  mnc->callback([&] {
    action = [&] {
      const auto frames = ingest_frames_text(read_file(points_path));
      const auto& f = select_frame(frames, frame);
      const auto tri = delaunay(f.points, {epsilon});
      ojson doc;
      doc["frame_id"] = f.id;
      doc["mncs"] = ojson::array();
      const auto mncs = find_mncs(tri);
      for (std::size_t j = 0; j < mncs.size(); ++j) {
        ojson item;
        item["feature_id"] = j + 1;
        item["nucleus"] = mncs[j].nucleus;
        item["triangles"] = triangle_list(mncs[j].triangles);
        item["area"] = mnc_area(tri, mncs[j]);
        item["spokes"] = ojson::array();
        for (std::size_t k = 1; k <= max_k; ++k) {
          const auto sk = spoke_complex(tri, mncs[j], k);
          item["spokes"].push_back({{"k", k}, {"triangles", triangle_list(sk.triangles)}});
        }
        doc["mncs"].push_back(std::move(item));
      }
      return Outputs{doc.dump() + "\n", "", kOk};
    };
  });

  auto* mcyc = app.add_subcommand("mcyc", "k-maximal cycle of every MNC");
  add_points_input(mcyc);
  mcyc->add_option("--k", level_k, "Spoke level")->check(CLI::PositiveNumber);
  mcyc->callback([&] {
    action = [&] {
      const auto frames = ingest_frames_text(read_file(points_path));
      const auto& f = select_frame(frames, frame);
      const auto tri = delaunay(f.points, {epsilon});
      ojson doc;
      doc["frame_id"] = f.id;
      doc["k"] = level_k;
      doc["cycles"] = ojson::array();
      const auto mncs = find_mncs(tri);
      for (std::size_t j = 0; j < mncs.size(); ++j) {
        ojson item;
        item["feature_id"] = j + 1;
        item["nucleus"] = mncs[j].nucleus;
        const auto sk = spoke_complex(tri, mncs[j], level_k);
        if (sk.triangles.size() < 3) {
          item["skipped"] = "TooFewTriangles";
        } else {
          const auto cycle = maximal_cycle(tri, sk);
          item["triangles"] = triangle_list(cycle.triangles);
          item["vertices"] = ojson::array();
          for (const auto& v : cycle.vertices) item["vertices"].push_back(point_json(v));
          item["length"] = cycle.length;
        }
        doc["cycles"].push_back(std::move(item));
      }
      return Outputs{doc.dump() + "\n", "", kOk};
    };
  });

  auto add_chain_options = [&](CLI::App* cmd) {
    cmd->add_option("frames", points_path, "Frames CSV (frame_id,x,y)")->required();
    cmd->add_option("--by", by, "area or length")->check(CLI::IsMember({"area", "length"}));
    cmd->add_option("--format", format, "Graph format: dot or json");
  };

  auto* frames_cmd = app.add_subcommand("frames", "Order frame-MNC pairs into a chain");
  add_chain_options(frames_cmd);
  frames_cmd->add_option("--graph", graph_path, "Write the chain graph to this file");
  frames_cmd->callback([&] {
    action = [&] {
      check_graph_format(format);
      const auto frames = ingest_frames_text(read_file(points_path));
      const auto chain = order_frames(frames, parse_measure_kind(by), {epsilon});
      for (const auto& s : chain.skipped) {
        ojson w;
        w["warning"] = "skipped";
        w["frame_id"] = s.frame_id;
        w["feature_id"] = s.feature_id;
        w["reason"] = s.reason;
        err << w.dump() << "\n";
      }
      Outputs o;
      o.primary = chain_to_csv(chain);
      o.graph = export_graph(chain_graph(chain), format) + (format == "json" ? "\n" : "");
      return o;
    };
  });

  auto* subgraph = app.add_subcommand("frame-subgraph", "Chain neighbourhood of one frame");
  add_chain_options(subgraph);
  subgraph->add_option("--frame", frame, "Frame id")->required();
  subgraph->callback([&] {
    action = [&] {
      check_graph_format(format);
      const auto frames = ingest_frames_text(read_file(points_path));
      const auto chain = order_frames(frames, parse_measure_kind(by), {epsilon});
      const auto g = frame_subgraph(chain, *frame);
      return Outputs{export_graph(g, format) + (format == "json" ? "\n" : ""), "", kOk};
    };
  });

  auto* gen = app.add_subcommand("gen-frames", "Synthetic frames CSV");
  gen->add_option("--frames", n_frames, "Number of frames")->check(CLI::PositiveNumber);
  gen->add_option("--points", n_points, "Points per frame")->check(CLI::Range(3, 1000000));
  gen->add_option("--seed", seed, "RNG seed");
  gen->callback([&] {
    action = [&] { return Outputs{frames_to_csv(generate_frames(n_frames, n_points, seed)), "", kOk}; };
  });

  std::vector<const char*> argv{"ordprox"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_usage(err, e.what());
    return kUsage;
  }

  try {
    const Outputs result = action();
    if (!graph_path.empty()) write_file_atomic(graph_path, result.graph);
    if (output.empty()) {
      out << result.primary;
    } else {
      write_file_atomic(output, result.primary);
    }
    return result.code;
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code_for(e);
  }
}

}  // namespace ordprox::cli
