#pragma once

#include <string>
#include <string_view>

#include "ordprox/order.hpp"
#include "ordprox/proximity.hpp"

namespace ordprox {

/// Parses and validates an order spec:
///   {"kind": "partial"|"total", "elements": [id...], "pairs": [[a, b]...]}
///   {"kind": "cyclic", "elements": [id...], "triples": [[a, b, c]...]}
/// Malformed documents throw ParseError; validation errors propagate.
OrderSpace parse_order_spec(std::string_view json_text);

std::string report_to_json(const PropertyReport& report);
std::string report_to_text(const PropertyReport& report);

/// Throws IoError.
std::string read_file(const std::string& path);

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never observe a partial file. Throws IoError.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace ordprox
