#include "doctest.h"
#include "fixtures.hpp"
#include "gem/complex.hpp"
#include "gem/io.hpp"
#include "gem/moves.hpp"

using namespace gem;

TEST_CASE("face vector of the order-2 graph") {
  const auto g = ColoredGraph::standard(3);
  CHECK(face_vector(g).counts == std::vector<long long>{4, 6, 4, 2});
  CHECK(euler_characteristic(g) == 0);
  CHECK(euler_characteristic(ColoredGraph::standard(4)) == 2);
}

TEST_CASE("sphere certification") {
  for (int d = 1; d <= 5; ++d) CHECK(certify_sphere(ColoredGraph::standard(d)).yes());

  // torus: the 3-colored graph on 6 vertices with g_01 = g_02 = g_12 = 1
  const ColoredGraph torus(2, {{1, 0, 3, 2, 5, 4}, {3, 4, 5, 0, 1, 2}, {5, 2, 1, 4, 3, 0}});
  const auto t = certify_sphere(torus);
  CHECK(t.no());
  CHECK(t.value == 0);

  const ColoredGraph rp3(parse_census_line(kRp3Line));
  CHECK(certify_gem(rp3).yes());
  CHECK_FALSE(certify_sphere(rp3).yes());
}

TEST_CASE("dipole reduction witness replays to order 2") {
  const auto base = ColoredGraph::standard(3);
  const auto g = connected_sum(base, 0, ColoredGraph(3, {{1, 0, 3, 2}, {2, 3, 0, 1}, {1, 0, 3, 2}, {1, 0, 3, 2}}), 0);
  const auto s = certify_sphere(g);
  REQUIRE(s.yes());
  if (s.witness_kind == "dipole_reduction") {
    ColoredGraph cur = g;
    for (const auto& m : s.moves) cur = eliminate_dipole(cur, m);
    CHECK(cur.order() == 2);
  }
}

TEST_CASE("singular 4-certification") {
  CHECK(certify_singular4(ColoredGraph::standard(4)).yes());
  CHECK_THROWS(certify_singular4(ColoredGraph::standard(3)));
}

TEST_CASE("memo does not change outcomes") {
  SphereMemo memo;
  CertOptions with;
  with.memo = &memo;
  const ColoredGraph rp3(parse_census_line(kRp3Line));
  CHECK(certify_gem(rp3, with).status == certify_gem(rp3).status);
  CHECK(certify_gem(rp3, with).status == certify_gem(rp3).status);
}
