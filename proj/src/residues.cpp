#include "gem/residues.hpp"

#include <queue>

#include "gem/union_find.hpp"

namespace gem {

std::vector<std::vector<int>> Components::groups() const {
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < static_cast<int>(label.size()); ++v) out[label[v]].push_back(v);
  return out;
}

Components residue_components(const ColoredGraph& g, ColorSet colors) {
  const int n = g.order();
  UnionFind uf(n);
  for (int c = 0; c < g.num_colors(); ++c) {
    if (!colors.contains(c)) continue;
    for (int v = 0; v < n; ++v) {
      const int w = g.partner(c, v);
      if (v < w) uf.unite(v, w);
    }
  }
  Components out;
  out.label.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (int v = 0; v < n; ++v) {
    const int r = uf.find(v);
    if (id_of_root[r] < 0) id_of_root[r] = out.count++;
    out.label[v] = id_of_root[r];
  }
  return out;
}

std::vector<std::vector<int>> residues(const ColoredGraph& g, ColorSet colors) {
  return residue_components(g, colors).groups();
}

ResidueCensus::ResidueCensus(const ColoredGraph& g) : num_colors_(g.num_colors()) {
  const std::uint32_t subsets = 1u << num_colors_;
  components_.reserve(subsets);
  for (std::uint32_t b = 0; b < subsets; ++b)
    components_.push_back(residue_components(g, ColorSet(b)));
}

long long ResidueCensus::sum_pairs() const {
  long long s = 0;
  for (int i = 0; i < num_colors_; ++i)
    for (int j = i + 1; j < num_colors_; ++j) s += g_pair(i, j);
  return s;
}

long long ResidueCensus::sum_triples() const {
  long long s = 0;
  for (int i = 0; i < num_colors_; ++i)
    for (int j = i + 1; j < num_colors_; ++j)
      for (int k = j + 1; k < num_colors_; ++k) s += g_triple(i, j, k);
  return s;
}

long long ResidueCensus::sum_hats() const {
  long long s = 0;
  for (int i = 0; i < num_colors_; ++i) s += g_hat(i);
  return s;
}

ResidueGraph extract_residue(const ColoredGraph& g, ColorSet colors, std::span<const int> vertices) {
  std::vector<int> index(g.order(), -1);
  for (int k = 0; k < static_cast<int>(vertices.size()); ++k) index[vertices[k]] = k;
  const auto kept = colors.colors();
  std::vector<std::vector<int>> m(kept.size(), std::vector<int>(vertices.size()));
  for (std::size_t ci = 0; ci < kept.size(); ++ci) {
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      const int w = index[g.partner(kept[ci], vertices[k])];
      if (w < 0) throw Error("extract_residue: vertex set is not closed under the residue colors");
      m[ci][k] = w;
    }
  }
  return ResidueGraph{ColoredGraph::unchecked(static_cast<int>(kept.size()) - 1, std::move(m)),
                      std::vector<int>(vertices.begin(), vertices.end()), colors};
}

std::vector<ResidueGraph> residue_graphs(const ColoredGraph& g, ColorSet colors) {
  std::vector<ResidueGraph> out;
  for (const auto& group : residues(g, colors)) out.push_back(extract_residue(g, colors, group));
  return out;
}

bool is_connected(const ColoredGraph& g) {
  return residue_components(g, ColorSet::full(g.num_colors())).count == 1;
}

namespace {

// Two-colors every component; returns false on an odd cycle.
bool two_color(const ColoredGraph& g, std::vector<int>& side) {
  const int n = g.order();
  side.assign(n, -1);
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int c = 0; c < g.num_colors(); ++c) {
        const int w = g.partner(c, v);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Bipartition is_bipartite(const ColoredGraph& g) {
  if (!is_connected(g)) throw Error("is_bipartite: graph is disconnected");
  std::vector<int> side;
  if (!two_color(g, side)) return {};
  return Bipartition{true, std::move(side)};
}

bool has_odd_cycle(const ColoredGraph& g) {
  std::vector<int> side;
  return !two_color(g, side);
}

}  // namespace gem
