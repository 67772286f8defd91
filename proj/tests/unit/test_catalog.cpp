#include <set>

#include "doctest.h"
#include "gem/canonical.hpp"
#include "gem/catalog.hpp"
#include "oracles.hpp"

using namespace gem;

namespace {

/// Isomorphism classes by brute force over every graph with color 0 fixed.
std::size_t brute_classes(int d, int order, bool connected_only) {
  const auto ms = all_perfect_matchings(order);
  std::vector<ColoredGraph> reps;
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    std::vector<std::vector<int>> colors{ms[0]};
    for (int c = 0; c < d; ++c) colors.push_back(ms[idx[c]]);
    if (!connected_only || oracle::connected(colors)) {
      const ColoredGraph g(d, colors);
      bool fresh = true;
      for (const auto& r : reps)
        if (oracle::count_isomorphisms(r, g) > 0) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(g);
    }
    int c = 0;
    while (c < d && ++idx[c] == ms.size()) idx[c++] = 0;
    if (c == d) break;
  }
  return reps.size();
}

}  // namespace

TEST_CASE("enumeration counts match brute force") {
  for (int d = 2; d <= 3; ++d)
    for (int order : {2, 4, 6}) {
      if (d == 3 && order == 6) continue;
      EnumerateOptions o;
      o.dimension = d;
      o.max_order = order;
      std::size_t at_order = 0;
      for (const auto& g : enumerate_graphs(o)) at_order += g.order() == order;
      CHECK(at_order == brute_classes(d, order, true));
    }
}

TEST_CASE("order-2 census") {
  EnumerateOptions o;
  o.dimension = 3;
  o.max_order = 2;
  const auto recs = enumerate(o);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].code == "gem1:3:2:1,0|1,0|1,0|1,0");
  CHECK(recs[0].sphere == Cert::Yes);
  CHECK(recs[0].hints == std::vector<std::string>{"R3a", "R3b"});
}

TEST_CASE("budgets and dimensions") {
  EnumerateOptions o;
  o.dimension = 4;
  o.max_order = 10;
  CHECK_THROWS_AS(enumerate_graphs(o), BudgetExceeded);
  o.dimension = 5;
  o.max_order = 2;
  CHECK_THROWS_AS(enumerate_graphs(o), Error);
}

TEST_CASE("filters") {
  EnumerateOptions o;
  o.dimension = 3;
  o.max_order = 6;
  const auto all = enumerate(o);
  o.bipartite_only = true;
  const auto bip = enumerate(o);
  o.crystallizations_only = true;
  const auto cr = enumerate(o);
  long long n_bip = 0, n_cr = 0;
  for (const auto& r : all) {
    n_bip += r.bipartite;
    n_cr += r.bipartite && r.crystallization;
  }
  CHECK(static_cast<long long>(bip.size()) == n_bip);
  CHECK(static_cast<long long>(cr.size()) == n_cr);
}

TEST_CASE("census index and sweep at small order") {
  EnumerateOptions o;
  o.dimension = 4;
  o.max_order = 4;
  const auto recs = enumerate(o);
  const auto sweep = sweep_checks(recs);
  CHECK(sweep.ok());
  const auto idx = census_index(o, recs, sweep);
  CHECK(idx["format"] == "gem-census-1");
  CHECK(idx["count"] == recs.size());
  for (const auto& [key, count] : idx["spectrum"].items()) CHECK(std::stoll(key) % 3 == 0);
  CHECK(census_lines(recs).size() > 0);
}

TEST_CASE("thread count does not change records") {
  EnumerateOptions o;
  o.dimension = 3;
  o.max_order = 6;
  o.threads = 1;
  const auto a = enumerate(o);
  o.threads = 4;
  const auto b = enumerate(o);
  CHECK(census_lines(a) == census_lines(b));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(record_to_json(a[i]) == record_to_json(b[i]));
}

TEST_CASE("rule table") {
  std::set<std::string> ids;
  for (const auto& r : rule_table()) ids.insert(r.id);
  for (const char* id : {"R3a", "R3b", "R3g", "R4a", "R4n", "R4s", "R4r", "R4k", "R4x"}) CHECK(ids.count(id) == 1);
}
