#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gem/invariants.hpp"
#include "gem/io.hpp"
#include "gem/moves.hpp"
#include "gem/residues.hpp"
#include "oracles.hpp"

using namespace gem;

TEST_CASE("half integers") {
  CHECK(HalfInt{3}.str() == "1.5");
  CHECK(HalfInt{-4}.str() == "-2");
  CHECK(HalfInt::whole(2) + HalfInt{1} == HalfInt{5});
}

TEST_CASE("jacket lists") {
  for (int d = 2; d <= 5; ++d) {
    const auto js = jackets(d);
    CHECK(js.size() == static_cast<std::size_t>(oracle::factorial(d) / 2));
    CHECK(js == oracle::cyclic_orders(d));
  }
  CHECK_THROWS(jackets(1));
}

TEST_CASE("degree of the order-2 graph is zero in every dimension") {
  for (int d = 1; d <= 5; ++d) CHECK(gurau_degree(ColoredGraph::standard(d)).gurau_degree_x2 == 0);
}

TEST_CASE("degree matches the walked-jacket oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 4;
    const auto g = oracle::random_graph(d, 2 + 2 * (trial % 7), rng);
    const auto r = gurau_degree(g);
    CHECK(r.gurau_degree_x2 == oracle::omega_x2(g));
    CHECK(r.gurau_degree_x2 % oracle::factorial(d - 1) == 0);
    CHECK(r.identities.at("dual_path").pass);
    CHECK(gurau_ryan_check(g).pass);
  }
}

TEST_CASE("quartic melonic graph") {
  // two vertices joined by colors 0, 2, 3; two more likewise; color 1 crossing
  const ColoredGraph g(3, {{1, 0, 3, 2}, {2, 3, 0, 1}, {1, 0, 3, 2}, {1, 0, 3, 2}});
  CHECK(gurau_degree(g).gurau_degree_x2 == 0);
  const auto ids = dim3_identity(g);
  CHECK(ids[0].pass);
}

TEST_CASE("dipole insertion shifts the degree by ((d-1)!/2)(r-1)(d-r)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 3 + trial % 2;
    const auto g = oracle::random_graph(d, 2 + 2 * (trial % 4), rng);
    const int r = 1 + static_cast<int>(rng() % d);
    std::vector<int> colors(d + 1);
    std::iota(colors.begin(), colors.end(), 0);
    std::shuffle(colors.begin(), colors.end(), rng);
    ColorSet s;
    for (int k = 0; k < r; ++k) s = s.with(colors[k]);
    std::vector<int> cuts;
    for (int k = 0; k < d + 1 - r; ++k) cuts.push_back(static_cast<int>(rng() % g.order()));
    const auto h = insert_dipole(g, s, cuts);
    const Dipole dp{g.order(), g.order() + 1, s};
    if (!is_dipole(h, dp)) continue;
    const long long shift_x2 = oracle::factorial(d - 1) * (r - 1) * (d - r);
    CHECK(oracle::omega_x2(h) - oracle::omega_x2(g) == shift_x2);
    CHECK(eliminate_dipole(h, dp) == g);
  }
}

TEST_CASE("connected sum adds degrees") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 3;
    const auto a = oracle::random_graph(d, 4, rng);
    const auto b = oracle::random_graph(d, 6, rng);
    for (int va = 0; va < a.order(); ++va) {
      const auto s = connected_sum(a, va, b, static_cast<int>(rng() % b.order()));
      CHECK(oracle::omega_x2(s) == oracle::omega_x2(a) + oracle::omega_x2(b));
    }
  }
}

TEST_CASE("RP3 crystallization") {
  const ColoredGraph g(parse_census_line(kRp3Line));
  const auto r = gurau_degree(g);
  CHECK(r.gurau_degree_x2 == 6);
  const ResidueCensus c(g);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) CHECK(c.g_pair(i, j) + c.g_pair(j, k) + c.g_pair(i, k) == 6);
  const auto ids = dim3_identity(g);
  CHECK(ids[0].pass);
  CHECK(ids[1].applicable);
  CHECK(ids[1].pass);
  const auto gap = genus_gap_dim3(g);
  CHECK(gap.pass);
  const auto h = oracle::first_homology(g);
  CHECK(h.rank == 0);
  CHECK(h.torsion == std::vector<long long>{2});
}

TEST_CASE("dimension-4 relation 1 on random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(4, 2 + 2 * (trial % 5), rng);
    CHECK(dim4_identities(g)[0].pass);
  }
}
