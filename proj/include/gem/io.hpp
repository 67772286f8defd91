#pragma once

#include <string>
#include <string_view>

#include "gem/colored_graph.hpp"
#include "json.hpp"

namespace gem {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Census line format: gem1:<d>:<2p>:<c0>|<c1>|...|<cd>, each <ci> a
/// comma-separated partner list. No whitespace.
std::string to_census_line(const ColoredGraph& g);
/// Parses without validating graph invariants. Throws ParseError on syntax errors.
GraphData parse_census_line(std::string_view line);

/// GEM-JSON: {"dimension": d, "vertices": 2p, "colors": [[...], ...]}.
nlohmann::ordered_json to_gem_json(const ColoredGraph& g);
GraphData gem_json_to_data(const nlohmann::json& j);

/// Reads a file holding either GEM-JSON or a census line (first non-empty
/// line). Throws ParseError on malformed input; the result is not validated.
GraphData read_graph_data(const std::string& path);
GraphData parse_graph_text(std::string_view text);

/// Writes through a temporary file and renames it into place.
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace gem
