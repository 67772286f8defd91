#pragma once

#include <span>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

/// Graph connected sum: deletes v1 from g1 and v2 from g2 and welds the
/// hanging edges of equal color. Vertices of g1 (minus v1) come first, in
/// order, followed by those of g2 (minus v2).
ColoredGraph connected_sum(const ColoredGraph& g1, int v1, const ColoredGraph& g2, int v2);

/// An r-dipole: u and v are joined exactly by the edges colored `colors` and
/// lie in different components of the subgraph with the complementary colors.
struct Dipole {
  int u = 0;
  int v = 0;
  ColorSet colors;

  int size() const { return colors.size(); }
  bool operator==(const Dipole&) const = default;
};

bool is_dipole(const ColoredGraph& g, const Dipole& dipole);

/// All dipoles of g, sorted by (u, v). Each vertex pair is tested with the
/// full set of colors joining it; a proper subset can never qualify because
/// the remaining joining colors connect u and v in the complementary subgraph.
std::vector<Dipole> find_dipoles(const ColoredGraph& g);

class StaleDipole : public Error {
 public:
  using Error::Error;
};

/// Removes u and v and welds the hanging edges by color. Remaining vertices
/// keep their relative order. Throws StaleDipole if the dipole is not valid
/// in g.
ColoredGraph eliminate_dipole(const ColoredGraph& g, const Dipole& dipole);

/// Inverse move. For every color c outside `colors` (ascending), the c-edge at
/// cut_vertices[k] is opened: the new vertex u = order() is attached to
/// cut_vertices[k] and the new vertex v = order() + 1 to its former partner.
/// u and v are joined by the edges colored `colors`. The returned graph holds
/// the candidate dipole {order(), order() + 1, colors}; whether it satisfies the
/// separation condition is left to is_dipole.
ColoredGraph insert_dipole(const ColoredGraph& g, ColorSet colors, std::span<const int> cut_vertices);

struct SimplifyResult {
  ColoredGraph graph;
  std::vector<Dipole> moves;  // in application order, each relative to the graph it was applied to
};

/// Eliminates 1-dipoles until every g_hat(i) equals 1. Throws gem::Error if
/// some g_hat(i) > 1 but no 1-dipole of color i exists.
SimplifyResult simplify_to_crystallization(const ColoredGraph& g);

/// Greedy dipole elimination: largest r first, then lexicographic (u, v).
/// Stops when no dipole remains or after max_moves eliminations.
SimplifyResult reduce_dipoles(const ColoredGraph& g, int max_moves);

}  // namespace gem
