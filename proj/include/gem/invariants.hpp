#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/residues.hpp"

namespace gem {

/// An exact multiple of 1/2, stored as twice its value.
struct HalfInt {
  long long x2 = 0;

  static HalfInt whole(long long v) { return HalfInt{2 * v}; }
  bool integral() const { return x2 % 2 == 0; }
  long long value() const { return x2 / 2; }
  std::string str() const;
  auto operator<=>(const HalfInt&) const = default;
  HalfInt operator+(HalfInt o) const { return HalfInt{x2 + o.x2}; }
  HalfInt operator-(HalfInt o) const { return HalfInt{x2 - o.x2}; }
};

/// A regular embedding of the graph, given by a cyclic color order.
struct Jacket {
  /// Canonical representative: cycle[0] == 0 and cycle[1] < cycle[d].
  std::vector<int> cycle;
  long long euler_char = 0;
  /// 2 - euler_char; even for bipartite graphs.
  long long genus_x2 = 0;
};

/// All cyclic orders of {0..d} up to rotation and reversal, lexicographic.
/// Throws for d < 2.
std::vector<std::vector<int>> jackets(int dimension);

/// Euler characteristic and genus of one jacket surface.
Jacket jacket_genus(const ColoredGraph& g, std::span<const int> cycle);
Jacket jacket_genus(const ResidueCensus& census, int half_order, std::span<const int> cycle);

struct IdentityRecord {
  std::string name;
  HalfInt lhs;
  HalfInt rhs;
  bool pass = false;
  /// False when the identity's hypothesis does not hold for this graph.
  bool applicable = true;
  std::string condition;
};

/// Raised when an unconditional identity fails. This signals a defect, not bad input.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

struct InvariantReport {
  int dimension = 0;
  int half_order = 0;
  std::vector<Jacket> jackets;
  long long regular_genus_x2 = 0;
  long long gurau_degree_x2 = 0;
  std::map<std::string, IdentityRecord> identities;

  std::optional<long long> gurau_degree() const {
    if (gurau_degree_x2 % 2) return std::nullopt;
    return gurau_degree_x2 / 2;
  }
  HalfInt omega() const { return HalfInt{gurau_degree_x2}; }
};

/// 2 * omega_G as the sum of all jacket genera.
long long gurau_degree_x2_from_jackets(const ColoredGraph& g);
long long gurau_degree_x2_from_jackets(const ResidueCensus& census, int half_order);
/// 2 * omega_G from the residue counts g_{rs} over unordered pairs.
long long gurau_degree_x2_from_pairs(const ResidueCensus& census, int half_order);

/// Gurau degree computed along both routes; throws IdentityViolation if they differ.
/// For d = 1 (a single bicolored cycle) the degree is 0.
InvariantReport gurau_degree(const ColoredGraph& g);

/// 2 * omega_G summed over the components of a graph (each computed by jackets).
long long gurau_degree_x2_components(const ColoredGraph& g);

IdentityRecord gurau_ryan_check(const ColoredGraph& g);

/// Requires d = 3. The second record checks omega = p - 1 and chi = 0 when the
/// graph is a crystallization certified as a 3-manifold gem.
std::vector<IdentityRecord> dim3_identity(const ColoredGraph& g);

/// Requires d = 4. Relation 1 always; the rest gated by certify_singular4.
std::vector<IdentityRecord> dim4_identities(const ColoredGraph& g);

struct GenusGap {
  /// omega_G - 3 * regular genus.
  HalfInt gap;
  /// p + 2 - 3 * min g_ij.
  long long predicted = 0;
  bool pass = false;
  /// Every g_ij equals (p + 2) / 3.
  bool equality_case = false;
  bool degree_equals_three_genus = false;
};

/// Requires a 4-colored crystallization certified as a 3-manifold gem.
GenusGap genus_gap_dim3(const ColoredGraph& g);

long long factorial(int n);

}  // namespace gem
