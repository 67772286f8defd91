#include <algorithm>

#include "gem/tensor_model.hpp"

namespace gem {

// Each bubble edge carries one index in 0..n-1. A white vertex holds T with the
// indices of its d edges, a black vertex holds Tbar likewise. The propagator
// <T_a Tbar_b> = n^{-(d-1)} delta_{ab}, so for a fixed assignment the Wick sum
// counts bijections white -> black with equal index vectors.
Rational literal_mean(const Bubble& b, int n, std::uint64_t max_assignments) {
  check_bubble(b);
  if (n < 1) throw Error("literal_mean: N must be positive");
  const int d = b.d;
  const auto whites = b.whites();
  const auto blacks = b.blacks();
  const int p = static_cast<int>(whites.size());

  // edge id of (color c, white w) and of (color c, black u) via its white partner.
  std::vector<int> white_pos(b.order(), -1);
  for (int k = 0; k < p; ++k) white_pos[whites[k]] = k;
  const int edges = p * d;
  std::uint64_t total_assignments = 1;
  for (int e = 0; e < edges; ++e) {
    total_assignments *= static_cast<std::uint64_t>(n);
    if (total_assignments > max_assignments) throw BudgetExceeded("literal_mean: index space too large");
  }

  std::vector<int> idx(edges, 0);
  std::vector<std::uint64_t> wv(p), bv(p);
  BigInt count = 0;
  for (std::uint64_t step = 0; step < total_assignments; ++step) {
    for (int k = 0; k < p; ++k) {
      std::uint64_t w = 0, u = 0;
      for (int c = 0; c < d; ++c) {
        w = w * n + idx[c * p + k];
        u = u * n + idx[c * p + white_pos[b.colors[c][blacks[k]]]];
      }
      wv[k] = w;
      bv[k] = u;
    }
    std::sort(wv.begin(), wv.end());
    std::sort(bv.begin(), bv.end());
    if (wv == bv) {
      BigInt ways = 1;
      int run = 1;
      for (int k = 1; k <= p; ++k) {
        if (k < p && wv[k] == wv[k - 1]) {
          ++run;
        } else {
          for (int t = 2; t <= run; ++t) ways *= t;
          run = 1;
        }
      }
      count += ways;
    }
    for (int e = 0; e < edges; ++e) {
      if (++idx[e] < n) break;
      idx[e] = 0;
    }
  }
  BigInt scale = 1;
  for (int t = 0; t < p * (d - 1); ++t) scale *= n;
  return Rational(count) / Rational(scale);
}

}  // namespace gem
