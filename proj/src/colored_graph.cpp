#include "gem/colored_graph.hpp"

#include <sstream>
#include <utility>

namespace gem {

std::vector<int> ColorSet::colors() const {
  std::vector<int> out;
  for (int c = 0; c < 32; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

ValidationReport validate(const GraphData& data) {
  ValidationReport r;
  auto add = [&](int color, int vertex, std::string msg) {
    r.violations.push_back({color, vertex, std::move(msg)});
  };
  if (data.dimension < 1) {
    add(-1, -1, "dimension must be at least 1, got " + std::to_string(data.dimension));
    return r;
  }
  if (data.dimension > 30) {
    add(-1, -1, "dimension " + std::to_string(data.dimension) + " is too large");
    return r;
  }
  if (data.vertices < 2 || data.vertices % 2 != 0)
    add(-1, -1, "vertex count must be a positive even number, got " + std::to_string(data.vertices));
  if (static_cast<int>(data.colors.size()) != data.dimension + 1) {
    add(-1, -1,
        "expected " + std::to_string(data.dimension + 1) + " color arrays, got " +
            std::to_string(data.colors.size()));
    return r;
  }
  if (!r.ok()) return r;
  const int n = data.vertices;
  for (int c = 0; c <= data.dimension; ++c) {
    const auto& m = data.colors[c];
    if (static_cast<int>(m.size()) != n) {
      add(c, -1,
          "color " + std::to_string(c) + " has " + std::to_string(m.size()) + " entries, expected " +
              std::to_string(n));
      continue;
    }
    for (int v = 0; v < n; ++v) {
      const int w = m[v];
      if (w < 0 || w >= n) {
        add(c, v,
            "partner out of range at color " + std::to_string(c) + ", vertex " + std::to_string(v));
      } else if (w == v) {
        add(c, v,
            "fixed point (loop) at color " + std::to_string(c) + ", vertex " + std::to_string(v));
      } else if (m[w] != v) {
        add(c, v,
            "not an involution at color " + std::to_string(c) + ", vertex " + std::to_string(v));
      }
    }
  }
  return r;
}

InvalidGraph::InvalidGraph(ValidationReport report)
    : Error("invalid colored graph: " + report.summary()), report_(std::move(report)) {}

ColoredGraph::ColoredGraph(const GraphData& data) {
  auto report = validate(data);
  if (!report.ok()) throw InvalidGraph(std::move(report));
  dimension_ = data.dimension;
  matchings_ = data.colors;
}

ColoredGraph::ColoredGraph(int dimension, std::vector<std::vector<int>> matchings)
    : ColoredGraph(GraphData{dimension,
                             matchings.empty() ? 0 : static_cast<int>(matchings.front().size()),
                             std::move(matchings)}) {}

ColoredGraph ColoredGraph::unchecked(int dimension, std::vector<std::vector<int>> matchings) {
  ColoredGraph g;
  g.dimension_ = dimension;
  g.matchings_ = std::move(matchings);
  return g;
}

ColoredGraph ColoredGraph::standard(int dimension) {
  return ColoredGraph(dimension, std::vector<std::vector<int>>(dimension + 1, {1, 0}));
}

ColorSet ColoredGraph::colors_between(int u, int v) const {
  ColorSet s;
  for (int c = 0; c < num_colors(); ++c)
    if (matchings_[c][u] == v) s = s.with(c);
  return s;
}

GraphData ColoredGraph::data() const { return GraphData{dimension_, order(), matchings_}; }

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.dimension() != b.dimension()) throw Error("disjoint_union: dimension mismatch");
  const int shift = a.order();
  auto m = a.matchings();
  for (int c = 0; c < a.num_colors(); ++c)
    for (int w : b.matching(c)) m[c].push_back(w + shift);
  return ColoredGraph::unchecked(a.dimension(), std::move(m));
}

ColoredGraph relabel(const ColoredGraph& g, std::span<const int> new_label) {
  const int n = g.order();
  std::vector<std::vector<int>> m(g.num_colors(), std::vector<int>(n));
  for (int c = 0; c < g.num_colors(); ++c)
    for (int v = 0; v < n; ++v) m[c][new_label[v]] = new_label[g.partner(c, v)];
  return ColoredGraph::unchecked(g.dimension(), std::move(m));
}

ColoredGraph permute_colors(const ColoredGraph& g, std::span<const int> color_map) {
  std::vector<std::vector<int>> m(g.num_colors());
  for (int c = 0; c < g.num_colors(); ++c) m[color_map[c]] = g.matchings()[c];
  return ColoredGraph::unchecked(g.dimension(), std::move(m));
}

namespace {

void extend_matchings(std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(cur.size());
  int first = 0;
  while (first < n && cur[first] >= 0) ++first;
  if (first == n) {
    out.push_back(cur);
    return;
  }
  for (int w = first + 1; w < n; ++w) {
    if (cur[w] >= 0) continue;
    cur[first] = w;
    cur[w] = first;
    extend_matchings(cur, out);
    cur[first] = -1;
    cur[w] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> all_perfect_matchings(int vertices) {
  std::vector<std::vector<int>> out;
  if (vertices <= 0 || vertices % 2) return out;
  std::vector<int> cur(vertices, -1);
  extend_matchings(cur, out);
  return out;
}

}  // namespace gem
