#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

struct CanonicalOptions {
  /// Also minimize over all permutations of the color names.
  bool permute_colors = false;
};

/// Canonical labelling under color-preserving isomorphism.
///
/// Two graphs get equal codes iff some vertex bijection maps every c-edge to a
/// c-edge. The code is the partner table of the relabelled graph, prefixed by
/// d and the order; text() renders it in the census line format.
struct CanonicalForm {
  std::vector<int> code;
  /// relabel[v] is the canonical label of vertex v.
  std::vector<int> relabel;
  /// Color renaming applied (identity unless permute_colors).
  std::vector<int> color_map;

  std::string text() const;
  ColoredGraph graph() const;
};

CanonicalForm canonical_form(const ColoredGraph& g, const CanonicalOptions& options = {});

/// Convenience: canonical_form(g).code.
std::vector<int> canonical_code(const ColoredGraph& g);

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);

class OrderLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Number of color-preserving automorphisms. Disconnected graphs are handled
/// component-wise (identical components may be permuted).
std::uint64_t automorphism_count(const ColoredGraph& g, int max_order = 32);

}  // namespace gem
