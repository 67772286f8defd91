#include "gem/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "gem/complex.hpp"

namespace gem {

std::string HalfInt::str() const {
  if (integral()) return std::to_string(x2 / 2);
  const long long whole = x2 / 2;  // truncates toward zero
  std::string sign = (x2 < 0 && whole == 0) ? "-" : "";
  return sign + std::to_string(whole) + ".5";
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<std::vector<int>> jackets(int dimension) {
  if (dimension < 2) throw Error("jackets: dimension must be at least 2");
  std::vector<int> rest(dimension);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (rest.front() < rest.back()) {
      std::vector<int> cycle{0};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      out.push_back(std::move(cycle));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

namespace {

std::vector<int> canonical_cycle(std::span<const int> cycle, int num_colors) {
  if (static_cast<int>(cycle.size()) != num_colors) throw Error("jacket: cycle is not a permutation of the colors");
  std::vector<int> seen(num_colors, 0);
  for (int c : cycle) {
    if (c < 0 || c >= num_colors || seen[c]) throw Error("jacket: cycle is not a permutation of the colors");
    seen[c] = 1;
  }
  std::vector<int> out(cycle.begin(), cycle.end());
  std::rotate(out.begin(), std::find(out.begin(), out.end(), 0), out.end());
  if (num_colors > 2 && out[1] > out.back()) std::reverse(out.begin() + 1, out.end());
  return out;
}

}  // namespace

Jacket jacket_genus(const ResidueCensus& census, int half_order, std::span<const int> cycle) {
  const int k = census.num_colors();
  const int d = k - 1;
  Jacket j;
  j.cycle = canonical_cycle(cycle, k);
  long long chi = static_cast<long long>(1 - d) * half_order;
  for (int t = 0; t < k; ++t) chi += census.g_pair(j.cycle[t], j.cycle[(t + 1) % k]);
  j.euler_char = chi;
  j.genus_x2 = 2 - chi;
  return j;
}

Jacket jacket_genus(const ColoredGraph& g, std::span<const int> cycle) {
  return jacket_genus(ResidueCensus(g), g.half_order(), cycle);
}

long long gurau_degree_x2_from_jackets(const ResidueCensus& census, int half_order) {
  long long total = 0;
  for (const auto& cycle : jackets(census.num_colors() - 1)) total += jacket_genus(census, half_order, cycle).genus_x2;
  return total;
}

long long gurau_degree_x2_from_jackets(const ColoredGraph& g) {
  return gurau_degree_x2_from_jackets(ResidueCensus(g), g.half_order());
}

long long gurau_degree_x2_from_pairs(const ResidueCensus& census, int half_order) {
  const long long d = census.num_colors() - 1;
  return factorial(static_cast<int>(d) - 1) * (d + d * (d - 1) / 2 * half_order - census.sum_pairs());
}

InvariantReport gurau_degree(const ColoredGraph& g) {
  if (!is_connected(g)) throw Error("gurau_degree: graph is disconnected");
  InvariantReport r;
  r.dimension = g.dimension();
  r.half_order = g.half_order();
  if (g.dimension() == 1) return r;

  const ResidueCensus census(g);
  long long min_genus = -1;
  for (const auto& cycle : jackets(g.dimension())) {
    auto j = jacket_genus(census, g.half_order(), cycle);
    r.gurau_degree_x2 += j.genus_x2;
    if (min_genus < 0 || j.genus_x2 < min_genus) min_genus = j.genus_x2;
    r.jackets.push_back(std::move(j));
  }
  r.regular_genus_x2 = min_genus;

  const long long closed = gurau_degree_x2_from_pairs(census, g.half_order());
  IdentityRecord dual{"dual_path", HalfInt{r.gurau_degree_x2}, HalfInt{closed}, r.gurau_degree_x2 == closed};
  if (!dual.pass)
    throw IdentityViolation("gurau_degree: jacket sum " + dual.lhs.str() + " differs from pair formula " +
                            dual.rhs.str());
  r.identities.emplace(dual.name, dual);
  return r;
}

long long gurau_degree_x2_components(const ColoredGraph& g) {
  if (g.dimension() <= 1) return 0;
  long long total = 0;
  for (const auto& comp : residue_graphs(g, ColorSet::full(g.num_colors())))
    total += gurau_degree(comp.graph).gurau_degree_x2;
  return total;
}

IdentityRecord gurau_ryan_check(const ColoredGraph& g) {
  const int d = g.dimension();
  if (d < 2) throw Error("gurau_ryan_check: needs d >= 2 (the recursion bottoms out at bicolored cycles)");
  const ResidueCensus census(g);
  long long rhs = factorial(d - 1) * (g.half_order() + d - census.sum_hats());
  const ColorSet all = ColorSet::full(g.num_colors());
  for (int i = 0; i < g.num_colors(); ++i)
    for (const auto& res : residue_graphs(g, all.without(i))) rhs += gurau_degree_x2_components(res.graph);
  IdentityRecord rec{"gurau_ryan", HalfInt{gurau_degree(g).gurau_degree_x2}, HalfInt{rhs}, false};
  rec.pass = rec.lhs == rec.rhs;
  if (!rec.pass)
    throw IdentityViolation("gurau_ryan_check: " + rec.lhs.str() + " != " + rec.rhs.str());
  return rec;
}

std::vector<IdentityRecord> dim3_identity(const ColoredGraph& g) {
  if (g.dimension() != 3) throw Error("dim3_identity: needs a 4-colored graph");
  const ResidueCensus census(g);
  const long long p = g.half_order();
  const long long chi = euler_characteristic(g);
  const HalfInt omega{gurau_degree(g).gurau_degree_x2};

  std::vector<IdentityRecord> out;
  const long long rhs = p - 1 - (census.sum_hats() - 4) + chi;
  IdentityRecord general{"dim3_euler", omega, HalfInt::whole(rhs), omega == HalfInt::whole(rhs)};
  if (!general.pass) throw IdentityViolation("dim3_identity: " + omega.str() + " != " + std::to_string(rhs));
  out.push_back(general);

  IdentityRecord cryst{"dim3_crystallization", omega, HalfInt::whole(p - 1), false};
  cryst.condition = "crystallization of a certified 3-manifold";
  cryst.applicable = census.sum_hats() == 4 && certify_gem(g).yes();
  cryst.pass = !cryst.applicable || (omega == HalfInt::whole(p - 1) && chi == 0);
  out.push_back(cryst);
  return out;
}

std::vector<IdentityRecord> dim4_identities(const ColoredGraph& g) {
  if (g.dimension() != 4) throw Error("dim4_identities: needs a 5-colored graph");
  const ResidueCensus census(g);
  const long long p = g.half_order();
  const HalfInt omega{gurau_degree(g).gurau_degree_x2};
  std::vector<IdentityRecord> out;

  const long long rel1 = 3 * (6 * (p - 1) - (census.sum_pairs() - 10));
  IdentityRecord r1{"dim4_relation1", omega, HalfInt::whole(rel1), omega == HalfInt::whole(rel1)};
  if (!r1.pass) throw IdentityViolation("dim4 relation 1: " + omega.str() + " != " + std::to_string(rel1));
  out.push_back(r1);

  const bool singular = certify_singular4(g).yes();
  const std::string cond = "all 3-residues have genus zero";
  auto gated = [&](std::string name, HalfInt lhs, HalfInt rhs) {
    IdentityRecord rec{std::move(name), lhs, rhs, false, singular, cond};
    rec.pass = !singular || lhs == rhs;
    out.push_back(rec);
  };
  gated("dim4_triples", HalfInt::whole(2 * census.sum_triples()), HalfInt::whole(3 * census.sum_pairs() - 10 * p));
  gated("dim4_relation2", omega, HalfInt::whole(8 * (p - 1) - 2 * (census.sum_triples() - 10)));
  const long long chi = euler_characteristic(g);
  gated("dim4_relation3", omega, HalfInt::whole(6 * ((p - 1) - (census.sum_hats() - 5) + (chi - 2))));
  gated("dim4_mod6", HalfInt::whole(omega.integral() ? omega.value() % 6 : -1), HalfInt::whole(0));
  return out;
}

GenusGap genus_gap_dim3(const ColoredGraph& g) {
  if (g.dimension() != 3) throw Error("genus_gap_dim3: needs a 4-colored graph");
  const ResidueCensus census(g);
  if (census.sum_hats() != 4) throw Error("genus_gap_dim3: graph is not a crystallization");
  if (!certify_gem(g).yes()) throw Error("genus_gap_dim3: graph is not a certified 3-manifold gem");
  const auto report = gurau_degree(g);
  const long long p = g.half_order();
  int min_pair = census.g_pair(0, 1);
  bool all_equal = true;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      min_pair = std::min(min_pair, census.g_pair(i, j));
      all_equal = all_equal && 3 * census.g_pair(i, j) == p + 2;
    }
  GenusGap gap;
  gap.gap = HalfInt{report.gurau_degree_x2 - 3 * report.regular_genus_x2};
  gap.predicted = p + 2 - 3LL * min_pair;
  gap.pass = gap.gap == HalfInt::whole(gap.predicted);
  gap.equality_case = all_equal;
  gap.degree_equals_three_genus = gap.gap == HalfInt{0};
  return gap;
}

}  // namespace gem
