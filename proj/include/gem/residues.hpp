#pragma once

#include <optional>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

/// Component labelling of the subgraph that keeps only the colors in a set.
/// Component ids are numbered by increasing smallest vertex.
struct Components {
  std::vector<int> label;
  int count = 0;

  std::vector<std::vector<int>> groups() const;
};

Components residue_components(const ColoredGraph& g, ColorSet colors);

/// The B-residues of g, each as a sorted vertex list.
std::vector<std::vector<int>> residues(const ColoredGraph& g, ColorSet colors);

/// Residue counts for every color subset of a graph.
///
/// count(B) is the number of connected components of the subgraph keeping only
/// the colors in B. Memberships are kept so residues can be extracted later.
class ResidueCensus {
 public:
  explicit ResidueCensus(const ColoredGraph& g);

  int num_colors() const { return num_colors_; }
  int count(ColorSet b) const { return components_[b.bits()].count; }
  const Components& components(ColorSet b) const { return components_[b.bits()]; }

  int g_pair(int i, int j) const { return count(ColorSet::of({i, j})); }
  int g_triple(int i, int j, int k) const { return count(ColorSet::of({i, j, k})); }
  /// Components of the subgraph with every color except i.
  int g_hat(int i) const { return count(ColorSet::full(num_colors_).without(i)); }

  /// Sum of g_{rs} over unordered pairs r < s.
  long long sum_pairs() const;
  /// Sum of g_{rst} over unordered triples r < s < t.
  long long sum_triples() const;
  long long sum_hats() const;

 private:
  int num_colors_;
  std::vector<Components> components_;
};

/// The subgraph induced on one B-residue, as a |B|-colored graph.
///
/// Colors of B are renumbered 0..|B|-1 in increasing order and vertices keep
/// their relative order. vertex_map[new] is the original vertex.
struct ResidueGraph {
  ColoredGraph graph;
  std::vector<int> vertex_map;
  ColorSet colors;
};

ResidueGraph extract_residue(const ColoredGraph& g, ColorSet colors, std::span<const int> vertices);

/// All residues of g for the given color set, as standalone graphs.
std::vector<ResidueGraph> residue_graphs(const ColoredGraph& g, ColorSet colors);

bool is_connected(const ColoredGraph& g);

struct Bipartition {
  bool bipartite = false;
  /// side[v] in {0, 1}; present only when bipartite.
  std::optional<std::vector<int>> side;
};

/// Throws gem::Error when g is disconnected.
Bipartition is_bipartite(const ColoredGraph& g);

/// Same test without the connectivity requirement (each component is checked).
bool has_odd_cycle(const ColoredGraph& g);

}  // namespace gem
