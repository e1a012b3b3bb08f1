#include "ordprox/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ordprox/error.hpp"

namespace ordprox {

namespace {

using nlohmann::json;

Error parse_error(const std::string& why) {
  return Error(ErrorCode::ParseError, "order spec: " + why);
}

std::vector<ElementId> string_list(const json& node, std::size_t arity, const char* what) {
  if (!node.is_array() || (arity != 0 && node.size() != arity)) {
    throw parse_error(std::string(what) + " must be an array" +
                      (arity ? " of " + std::to_string(arity) + " element ids" : ""));
  }
  std::vector<ElementId> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw parse_error(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

OrderSpace parse_order_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw parse_error(e.what());
  }
  if (!doc.is_object()) throw parse_error("top level must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw parse_error("missing \"kind\"");
  if (!doc.contains("elements")) throw parse_error("missing \"elements\"");
  const auto kind = doc["kind"].get<std::string>();
  const auto elements = string_list(doc["elements"], 0, "elements");

  if (kind == "cyclic") {
    if (doc.contains("pairs")) throw parse_error("cyclic orders take \"triples\", not \"pairs\"");
    std::vector<OrderedTriple> triples;
    if (doc.contains("triples")) {
      if (!doc["triples"].is_array()) throw parse_error("\"triples\" must be an array");
      for (const auto& t : doc["triples"]) {
        auto ids = string_list(t, 3, "triple");
        triples.push_back({ids[0], ids[1], ids[2]});
      }
    }
    return validate_cyclic_order(elements, triples);
  }
  if (kind != "partial" && kind != "total") {
    throw parse_error("unknown kind '" + kind + "'");
  }
  if (doc.contains("triples")) throw parse_error(kind + " orders take \"pairs\", not \"triples\"");
  std::vector<OrderedPair> pairs;
  if (doc.contains("pairs")) {
    if (!doc["pairs"].is_array()) throw parse_error("\"pairs\" must be an array");
    for (const auto& p : doc["pairs"]) {
      auto ids = string_list(p, 2, "pair");
      pairs.emplace_back(ids[0], ids[1]);
    }
  }
  if (kind == "partial") return validate_partial_order(elements, pairs);
  return validate_total_order(elements, pairs);
}

std::string report_to_json(const PropertyReport& report) {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(to_string(report.kind));
  doc["all_hold"] = report.all_hold();
  doc["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : report.properties) {
    nlohmann::ordered_json item;
    item["name"] = p.name;
    item["holds"] = p.holds;
    item["counterexample"] = p.counterexample ? nlohmann::ordered_json(*p.counterexample)
                                              : nlohmann::ordered_json(nullptr);
    doc["properties"].push_back(std::move(item));
  }
  return doc.dump();
}

std::string report_to_text(const PropertyReport& report) {
  std::ostringstream os;
  os << "kind: " << to_string(report.kind) << "\n";
  for (const auto& p : report.properties) {
    os << p.name << ": " << (p.holds ? "holds" : "FAILS");
    if (p.counterexample) {
      os << " (counterexample:";
      for (const auto& id : *p.counterexample) os << " " << id;
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading", {path});
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "failed reading '" + path + "'", {path});
  return buf.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open '" + temp + "' for writing", {path});
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw Error(ErrorCode::IoError, "failed writing '" + temp + "'", {path});
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw Error(ErrorCode::IoError, "cannot move output into place at '" + path + "'", {path});
  }
}

}  // namespace ordprox
