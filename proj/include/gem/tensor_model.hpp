#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/invariants.hpp"
#include "gem/laurent.hpp"
#include "json.hpp"

namespace gem {

class NotABubble : public Error {
 public:
  using Error::Error;
};

/// A tensor invariant B(T, Tbar) as a bipartite d-colored graph.
///
/// Bubble colors are 1..d; colors[c - 1][v] is the c-partner of v. Color 0 is
/// reserved for the propagator edges added by a pairing. parity[v] is 1 for a
/// white vertex (T) and 0 for a black one (Tbar).
struct Bubble {
  int d = 0;
  std::vector<std::vector<int>> colors;
  std::vector<int> parity;

  int order() const { return static_cast<int>(parity.size()); }
  int half_order() const { return order() / 2; }
  std::vector<int> whites() const;
  std::vector<int> blacks() const;
  /// The bubble as a ColoredGraph of dimension d - 1 (bubble color c becomes color c - 1). Needs d >= 2.
  ColoredGraph graph() const;
};

/// Throws NotABubble unless every color is a perfect matching joining white to black.
void check_bubble(const Bubble& b);
Bubble make_bubble(int d, std::vector<std::vector<int>> colors, std::vector<int> parity);

/// GEM-JSON with dimension d - 1 plus a "parity" array.
nlohmann::ordered_json bubble_to_json(const Bubble& b);
Bubble bubble_from_json(const nlohmann::json& j);

/// T . Tbar: one white and one black vertex joined by all d colors.
Bubble quadratic_bubble(int d);
/// The quartic invariant whose color m is exchanged between the two T/Tbar pairs.
Bubble quartic_bubble(int d, int m = 1);
Bubble product(const Bubble& a, const Bubble& b);

/// black_of_white[k] is the black vertex paired with the k-th white vertex (in vertex order).
struct WickPairing {
  std::vector<int> black_of_white;
  bool operator==(const WickPairing&) const = default;
};

/// All p! pairings, lexicographic in black_of_white.
std::vector<WickPairing> pairings(const Bubble& b);

/// Bubble plus a color-0 edge for every paired white/black vertex.
ColoredGraph feynman_graph(const Bubble& b, const WickPairing& sigma);

/// -p(d-1) + sum over c = 1..d of g_{0c}.
int weight_exponent(const ColoredGraph& feynman);
LaurentPolynomial graph_weight(const ColoredGraph& feynman);

struct MeanOptions {
  int max_half_order = 8;
};

/// Sum of graph weights over all pairings. Throws BudgetExceeded if p > max_half_order.
LaurentPolynomial gaussian_mean(const Bubble& b, const MeanOptions& options = {});

/// Color-preserving automorphisms that also keep white vertices white. Connected bubbles only.
std::uint64_t bubble_automorphism_count(const Bubble& b);

/// Coupling data for one connected bubble.
struct AmplitudeSpec {
  Bubble bubble;
  std::string name;
  std::uint64_t automorphisms = 0;
  HalfInt degree;
  /// d - 1 - 2 omega(B) / (d - 2)!
  long long exponent = 0;
};

AmplitudeSpec amplitude_spec(const Bubble& b, std::string name = "t");

/// Checks weight exponent + sum of per-bubble exponents = d - 2 omega(feynman) / (d - 1)!.
///
/// The connected components of the listed bubbles must match the 0-hat
/// residues of the Feynman graph as a multiset; otherwise gem::Error. The
/// record's lhs/rhs hold the two exponents.
IdentityRecord amplitude_exponent_check(const std::vector<Bubble>& bubbles, const ColoredGraph& feynman);

/// Literal contraction: N^{-p(d-1)} times the number of (index assignment,
/// pairing) pairs that satisfy every Kronecker delta, at a concrete N. Does
/// not use cycle counts. Throws BudgetExceeded when N^{pd} > max_assignments.
Rational literal_mean(const Bubble& b, int n, std::uint64_t max_assignments = 50'000'000);

/// Covariance data for the vector-valued Wick theorem: inverse[i][j] = <x_i, x_j>.
struct CovarianceSpec {
  int m = 0;
  std::vector<std::vector<Rational>> inverse;
};

void check_covariance(const CovarianceSpec& cov);
CovarianceSpec covariance_from_json(const nlohmann::json& j);

struct WickVectorResult {
  /// Multiset of index pairs (i <= j, 1-based, sorted) -> number of pairings giving it.
  std::map<std::vector<std::pair<int, int>>, BigInt> monomials;
  Rational value;

  /// e.g. "3*Cinv[1,1]*Cinv[1,2]"; "0" when there are no pairings.
  std::string str() const;
};

/// <x_{i_1} ... x_{i_n}>: sum over the (n-1)!! pairings. Indices are 1-based.
WickVectorResult wick_vector(const std::vector<int>& indices, const CovarianceSpec& cov);

}  // namespace gem
