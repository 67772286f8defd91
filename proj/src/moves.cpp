#include "gem/moves.hpp"

#include <algorithm>
#include <string>

#include "gem/residues.hpp"

namespace gem {

ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2) {
  if (g1.dimension() != g2.dimension()) throw Error("connected_sum: dimension mismatch");
  if (v1 < 0 || v1 >= g1.order()) throw Error("connected_sum: invalid vertex " + std::to_string(v1));
  if (v2 < 0 || v2 >= g2.order()) throw Error("connected_sum: invalid vertex " + std::to_string(v2));

  const int n1 = g1.order() - 1;
  const int n = n1 + g2.order() - 1;
  auto index1 = [&](int v) { return v < v1 ? v : v - 1; };
  auto index2 = [&](int v) { return n1 + (v < v2 ? v : v - 1); };

  std::vector<std::vector<int>> m(g1.num_colors(), std::vector<int>(n));
  for (int c = 0; c < g1.num_colors(); ++c) {
    const int a = index1(g1.partner(c, v1));
    const int b = index2(g2.partner(c, v2));
    for (int v = 0; v < g1.order(); ++v)
      if (v != v1) m[c][index1(v)] = index1(g1.partner(c, v));
    for (int v = 0; v < g2.order(); ++v)
      if (v != v2) m[c][index2(v)] = index2(g2.partner(c, v));
    m[c][a] = b;
    m[c][b] = a;
  }
  return ColoredGraph(g1.dimension(), std::move(m));
}

bool is_dipole(const ColoredGraph& g, const Dipole& d) {
  const int n = g.order();
  if (d.u < 0 || d.v < 0 || d.u >= n || d.v >= n || d.u == d.v) return false;
  if (d.colors.empty() || d.colors.size() > g.dimension()) return false;
  if (!d.colors.subset_of(ColorSet::full(g.num_colors()))) return false;
  if (g.colors_between(d.u, d.v) != d.colors) return false;
  const auto comps = residue_components(g, d.colors.complement(g.num_colors()));
  return comps.label[d.u] != comps.label[d.v];
}

std::vector<Dipole> find_dipoles(const ColoredGraph& g) {
  std::vector<Dipole> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int c = 0; c < g.num_colors(); ++c) {
      const int v = g.partner(c, u);
      if (v < u) continue;
      const ColorSet joined = g.colors_between(u, v);
      // visit each pair once, through its smallest joining color
      if (joined.colors().front() != c) continue;
      Dipole d{u, v, joined};
      if (is_dipole(g, d)) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Dipole& a, const Dipole& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return out;
}

ColoredGraph eliminate_dipole(const ColoredGraph& g, const Dipole& d) {
  if (!is_dipole(g, d))
    throw StaleDipole("eliminate_dipole: (" + std::to_string(d.u) + ", " + std::to_string(d.v) +
                      ") is not a dipole of the graph");
  const int n = g.order();
  std::vector<int> index(n, -1);
  for (int v = 0, k = 0; v < n; ++v)
    if (v != d.u && v != d.v) index[v] = k++;

  std::vector<std::vector<int>> m(g.num_colors(), std::vector<int>(n - 2));
  for (int c = 0; c < g.num_colors(); ++c) {
    for (int v = 0; v < n; ++v)
      if (index[v] >= 0 && index[g.partner(c, v)] >= 0) m[c][index[v]] = index[g.partner(c, v)];
    if (!d.colors.contains(c)) {
      const int a = index[g.partner(c, d.u)];
      const int b = index[g.partner(c, d.v)];
      m[c][a] = b;
      m[c][b] = a;
    }
  }
  return ColoredGraph::unchecked(g.dimension(), std::move(m));
}

ColoredGraph insert_dipole(const ColoredGraph& g, ColorSet colors, std::span<const int> cut_vertices) {
  const int n = g.order();
  const auto open = colors.complement(g.num_colors()).colors();
  if (colors.empty() || colors.size() > g.dimension())
    throw Error("insert_dipole: dipole must have between 1 and d colors");
  if (cut_vertices.size() != open.size())
    throw Error("insert_dipole: need one cut vertex per complementary color");

  const int u = n, v = n + 1;
  auto m = g.matchings();
  for (auto& row : m) row.resize(n + 2);
  for (int c : colors.colors()) {
    m[c][u] = v;
    m[c][v] = u;
  }
  for (std::size_t k = 0; k < open.size(); ++k) {
    const int c = open[k];
    const int a = cut_vertices[k];
    if (a < 0 || a >= n) throw Error("insert_dipole: invalid cut vertex");
    const int b = g.partner(c, a);
    m[c][a] = u;
    m[c][u] = a;
    m[c][b] = v;
    m[c][v] = b;
  }
  return ColoredGraph::unchecked(g.dimension(), std::move(m));
}

SimplifyResult simplify_to_crystallization(const ColoredGraph& g) {
  SimplifyResult r{g, {}};
  for (;;) {
    const ColoredGraph& cur = r.graph;
    int color = -1;
    Components comps;
    for (int i = 0; i < cur.num_colors() && color < 0; ++i) {
      comps = residue_components(cur, ColorSet::full(cur.num_colors()).without(i));
      if (comps.count > 1) color = i;
    }
    if (color < 0) return r;

    std::optional<Dipole> found;
    for (int u = 0; u < cur.order() && !found; ++u) {
      const int v = cur.partner(color, u);
      // an i-edge between distinct residues carries no parallel edge
      if (comps.label[u] != comps.label[v]) found = Dipole{std::min(u, v), std::max(u, v), ColorSet::single(color)};
    }
    if (!found)
      throw Error("simplify_to_crystallization: no 1-dipole of color " + std::to_string(color) +
                  " although its residue count exceeds one");
    r.moves.push_back(*found);
    r.graph = eliminate_dipole(cur, *found);
  }
}

SimplifyResult reduce_dipoles(const ColoredGraph& g, int max_moves) {
  SimplifyResult r{g, {}};
  while (static_cast<int>(r.moves.size()) < max_moves) {
    auto dipoles = find_dipoles(r.graph);
    if (dipoles.empty()) break;
    auto best = std::min_element(dipoles.begin(), dipoles.end(), [](const Dipole& a, const Dipole& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    r.moves.push_back(*best);
    r.graph = eliminate_dipole(r.graph, *best);
  }
  return r;
}

}  // namespace gem
