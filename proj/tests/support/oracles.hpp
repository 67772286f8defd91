#pragma once
// Test-side reference computations. Nothing here calls the library code it checks.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gem/colored_graph.hpp"

namespace oracle {

using gem::ColoredGraph;

inline std::vector<int> random_matching(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n), m(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int k = 0; k < n; k += 2) {
    m[perm[k]] = perm[k + 1];
    m[perm[k + 1]] = perm[k];
  }
  return m;
}

inline bool connected(const std::vector<std::vector<int>>& ms) {
  const int n = static_cast<int>(ms.front().size());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& m : ms)
      if (!seen[m[v]]) {
        seen[m[v]] = 1;
        ++count;
        stack.push_back(m[v]);
      }
  }
  return count == n;
}

/// A uniformly random connected (d+1)-colored graph of the given order.
inline ColoredGraph random_graph(int d, int order, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::vector<int>> ms;
    for (int c = 0; c <= d; ++c) ms.push_back(random_matching(order, rng));
    if (connected(ms)) return ColoredGraph(d, ms);
  }
}

/// Number of bicolored cycles in colors a, b, found by walking them.
inline long long bicolored_cycles(const ColoredGraph& g, int a, int b) {
  std::vector<char> seen(g.order(), 0);
  long long cycles = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    int v = s;
    bool use_a = true;
    do {
      seen[v] = 1;
      v = g.partner(use_a ? a : b, v);
      use_a = !use_a;
    } while (v != s || !use_a);
  }
  return cycles;
}

/// Cyclic orders of 0..d with first element 0, up to reversal.
inline std::vector<std::vector<int>> cyclic_orders(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> rest(d);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.front() < rest.back()) {
      std::vector<int> c{0};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(c);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

/// 2 * Gurau degree: sum over jackets of (2 - chi) of the jacket surface.
inline long long omega_x2(const ColoredGraph& g) {
  const int d = g.dimension();
  if (d < 2) return 0;
  const long long v = g.order();
  const long long e = static_cast<long long>(d + 1) * v / 2;
  long long total = 0;
  for (const auto& cyc : cyclic_orders(d)) {
    long long f = 0;
    for (int k = 0; k <= d; ++k) f += bicolored_cycles(g, cyc[k], cyc[(k + 1) % (d + 1)]);
    total += 2 - (v - e + f);
  }
  return total;
}

inline bool bipartite(const ColoredGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int c = 0; c <= g.dimension(); ++c) {
        const int w = g.partner(c, v);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Color-preserving vertex bijections a -> b, by trying every permutation.
inline long long count_isomorphisms(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.dimension() != b.dimension() || a.order() != b.order()) return 0;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int c = 0; c <= a.dimension() && ok; ++c)
      for (int v = 0; v < a.order() && ok; ++v) ok = perm[a.partner(c, v)] == b.partner(c, perm[v]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Smith normal form diagonal of an integer matrix (nonzero entries only).
inline std::vector<boost::multiprecision::cpp_int> smith_diagonal(
    std::vector<std::vector<boost::multiprecision::cpp_int>> m) {
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero |entry| in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) pr = r, pc = c;
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const cpp_int q = m[r][t] / m[t][t];
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const cpp_int q = m[t][c] / m[t][t];
        if (q != 0)
          for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (clean)
        for (std::size_t r = t + 1; r < rows && clean; ++r)
          for (std::size_t c = t + 1; c < cols && clean; ++c)
            if (m[r][c] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
              clean = false;
            }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

struct Homology1 {
  long long rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1
};

/// H_1 of the complex dual to g. A k-simplex is a component of the residue
/// on the d - k colors missing from its vertex labels; faces drop one label.
inline Homology1 first_homology(const ColoredGraph& g) {
  using boost::multiprecision::cpp_int;
  const int k = g.num_colors();
  // component id of every vertex for every color subset
  std::map<unsigned, std::vector<int>> comp;
  std::map<unsigned, int> ncomp;
  for (unsigned bits = 0; bits < (1u << k); ++bits) {
    std::vector<int> label(g.order(), -1);
    int n = 0;
    for (int s = 0; s < g.order(); ++s) {
      if (label[s] >= 0) continue;
      label[s] = n;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int c = 0; c < k; ++c)
          if ((bits >> c) & 1u) {
            const int w = g.partner(c, v);
            if (label[w] < 0) {
              label[w] = n;
              stack.push_back(w);
            }
          }
      }
      ++n;
    }
    comp[bits] = label;
    ncomp[bits] = n;
  }
  const unsigned full = (1u << k) - 1u;
  // simplices of dimension q: (label set S with |S| = q + 1, component of full \ S)
  auto simplices = [&](int q) {
    std::vector<std::pair<unsigned, int>> out;
    for (unsigned s = 0; s <= full; ++s)
      if (__builtin_popcount(s) == q + 1)
        for (int c = 0; c < ncomp[full & ~s]; ++c) out.emplace_back(s, c);
    return out;
  };
  auto boundary = [&](int q) {
    const auto hi = simplices(q), lo = simplices(q - 1);
    std::map<std::pair<unsigned, int>, std::size_t> lo_index;
    for (std::size_t i = 0; i < lo.size(); ++i) lo_index[lo[i]] = i;
    std::vector<std::vector<cpp_int>> m(lo.size(), std::vector<cpp_int>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      const auto [s, c] = hi[j];
      const unsigned rest = full & ~s;
      int rep = -1;  // a graph vertex inside this component
      for (int v = 0; v < g.order() && rep < 0; ++v)
        if (comp[rest][v] == c) rep = v;
      int pos = 0;
      for (int x = 0; x < k; ++x)
        if ((s >> x) & 1u) {
          const unsigned face = s & ~(1u << x);
          const int fc = comp[full & ~face][rep];
          m[lo_index[{face, fc}]][j] += pos % 2 ? -1 : 1;
          ++pos;
        }
    }
    return m;
  };
  const auto d1 = boundary(1), d2 = boundary(2);
  const long long edges = static_cast<long long>(d1.empty() ? 0 : d1[0].size());
  const long long rank1 = static_cast<long long>(smith_diagonal(d1).size());
  const auto diag2 = smith_diagonal(d2);
  Homology1 h;
  h.rank = edges - rank1 - static_cast<long long>(diag2.size());
  for (const auto& x : diag2)
    if (x > 1) h.torsion.push_back(static_cast<long long>(x));
  return h;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace oracle
