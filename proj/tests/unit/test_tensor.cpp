#include "doctest.h"
#include "gem/canonical.hpp"
#include "gem/tensor_model.hpp"

using namespace gem;

TEST_CASE("Laurent polynomial text and arithmetic") {
  const auto a = LaurentPolynomial::monomial(1) + LaurentPolynomial::monomial(-1);
  CHECK(a.str() == "N^1 + N^-1");
  CHECK((a * a).str() == "N^2 + 2*N^0 + N^-2");
  CHECK(LaurentPolynomial().str() == "0");
  CHECK(a.evaluate(2) == Rational(5, 2));
  CHECK(a.to_json().dump() == R"({"-1":1,"1":1})");
}

TEST_CASE("quadratic and quartic means") {
  for (int d = 3; d <= 5; ++d) {
    CHECK(gaussian_mean(quadratic_bubble(d)) == LaurentPolynomial::monomial(1));
    for (int m = 1; m <= d; ++m)
      CHECK(gaussian_mean(quartic_bubble(d, m)) == LaurentPolynomial::monomial(1) + LaurentPolynomial::monomial(3 - d));
  }
}

TEST_CASE("means agree with literal contraction") {
  for (const auto& b : {quadratic_bubble(3), quartic_bubble(3, 2), product(quadratic_bubble(3), quadratic_bubble(3))})
    for (int n : {2, 3}) CHECK(gaussian_mean(b).evaluate(n) == literal_mean(b, n));
}

TEST_CASE("pairings and Feynman graphs") {
  const auto b = product(quartic_bubble(3), quartic_bubble(3, 2));
  const auto ps = pairings(b);
  CHECK(ps.size() == 24);
  for (const auto& s : ps) {
    const auto f = feynman_graph(b, s);
    CHECK(f.order() == 8);
    CHECK(f.dimension() == 3);
  }
}

TEST_CASE("bubbles are validated") {
  CHECK_THROWS_AS(make_bubble(3, {{1, 0}, {1, 0}, {1, 0}}, {1, 1}), NotABubble);
  CHECK_THROWS_AS(make_bubble(3, {{1, 0}, {1, 0}, {0, 1}}, {1, 0}), NotABubble);
  CHECK_THROWS_AS(bubble_from_json(nlohmann::json::parse("{\"colors\": [[1, 0]]}")), NotABubble);
  const auto q = quartic_bubble(4, 2);
  CHECK(bubble_from_json(nlohmann::json::parse(bubble_to_json(q).dump())).colors == q.colors);
}

TEST_CASE("amplitude data") {
  CHECK(bubble_automorphism_count(quartic_bubble(3)) == 2);
  CHECK(automorphism_count(quartic_bubble(3).graph()) == 4);
  const auto spec = amplitude_spec(quartic_bubble(4));
  CHECK(spec.degree == HalfInt{0});
}

TEST_CASE("budgets") {
  Bubble big = quadratic_bubble(3);
  for (int k = 0; k < 8; ++k) big = product(big, quadratic_bubble(3));
  CHECK_THROWS_AS(gaussian_mean(big), BudgetExceeded);
}

TEST_CASE("vector Wick theorem") {
  const auto cov = covariance_from_json(nlohmann::json::parse(R"([[1, "1/2"], ["1/2", 3]])"));
  const auto r = wick_vector({1, 1, 1, 2}, cov);
  CHECK(r.str() == "3*Cinv[1,1]*Cinv[1,2]");
  CHECK(r.value == Rational(3, 2));
  CHECK(wick_vector({1, 2, 1}, cov).value == 0);
  CHECK(wick_vector({2, 2, 2, 2}, cov).value == 27);
  CHECK_THROWS(covariance_from_json(nlohmann::json::parse("[[1, 2], [3, 4]]")));
}
