#include "gem/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gem {
namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw ParseError("census line: bad " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string to_census_line(const ColoredGraph& g) {
  std::string out = "gem1:" + std::to_string(g.dimension()) + ":" + std::to_string(g.order()) + ":";
  for (int c = 0; c < g.num_colors(); ++c) {
    if (c) out += '|';
    for (int v = 0; v < g.order(); ++v) {
      if (v) out += ',';
      out += std::to_string(g.partner(c, v));
    }
  }
  return out;
}

GraphData parse_census_line(std::string_view line) {
  const auto fields = split(line, ':');
  if (fields.size() != 4 || fields[0] != "gem1")
    throw ParseError("census line: expected gem1:<d>:<2p>:<colors>");
  GraphData data;
  data.dimension = parse_int(fields[1], "dimension");
  data.vertices = parse_int(fields[2], "vertex count");
  for (auto block : split(fields[3], '|')) {
    std::vector<int> row;
    for (auto item : split(block, ',')) row.push_back(parse_int(item, "partner"));
    data.colors.push_back(std::move(row));
  }
  return data;
}

nlohmann::ordered_json to_gem_json(const ColoredGraph& g) {
  nlohmann::ordered_json j;
  j["dimension"] = g.dimension();
  j["vertices"] = g.order();
  j["colors"] = g.matchings();
  return j;
}

GraphData gem_json_to_data(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("GEM-JSON: expected an object");
    for (const char* key : {"dimension", "vertices", "colors"})
      if (!j.contains(key)) throw ParseError(std::string("GEM-JSON: missing key \"") + key + "\"");
    GraphData data;
    data.dimension = j.at("dimension").get<int>();
    data.vertices = j.at("vertices").get<int>();
    data.colors = j.at("colors").get<std::vector<std::vector<int>>>();
    return data;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("GEM-JSON: ") + e.what());
  }
}

GraphData parse_graph_text(std::string_view text) {
  const auto body = trim(text);
  if (body.rfind("gem1:", 0) == 0) {
    const auto eol = body.find('\n');
    return parse_census_line(trim(body.substr(0, eol)));
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return gem_json_to_data(j);
}

GraphData read_graph_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph_text(ss.str());
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gem
