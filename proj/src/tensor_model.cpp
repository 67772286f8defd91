#include "gem/tensor_model.hpp"

#include <algorithm>

#include "gem/canonical.hpp"
#include "gem/residues.hpp"

namespace gem {

std::vector<int> Bubble::whites() const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v)
    if (parity[v] == 1) out.push_back(v);
  return out;
}

std::vector<int> Bubble::blacks() const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v)
    if (parity[v] == 0) out.push_back(v);
  return out;
}

ColoredGraph Bubble::graph() const {
  if (d < 2) throw Error("bubble graph: needs at least two colors");
  return ColoredGraph(GraphData{d - 1, order(), colors});
}

void check_bubble(const Bubble& b) {
  const int n = b.order();
  if (b.d < 1) throw NotABubble("not a bubble: needs at least one color");
  if (n < 2 || n % 2) throw NotABubble("not a bubble: vertex count must be even and positive");
  if (static_cast<int>(b.colors.size()) != b.d) throw NotABubble("not a bubble: expected one matching per color");
  for (int v = 0; v < n; ++v)
    if (b.parity[v] != 0 && b.parity[v] != 1) throw NotABubble("not a bubble: parity entries must be 0 or 1");
  const auto whites = std::count(b.parity.begin(), b.parity.end(), 1);
  if (2 * whites != n)
    throw NotABubble("not a bubble: " + std::to_string(whites) + " white and " + std::to_string(n - whites) +
                     " black vertices");
  for (int c = 0; c < b.d; ++c) {
    const auto& m = b.colors[c];
    if (static_cast<int>(m.size()) != n) throw NotABubble("not a bubble: color " + std::to_string(c + 1) + " has wrong length");
    for (int v = 0; v < n; ++v) {
      const int u = m[v];
      if (u < 0 || u >= n || u == v || m[u] != v)
        throw NotABubble("not a bubble: color " + std::to_string(c + 1) + " is not a perfect matching at vertex " +
                         std::to_string(v));
      if (b.parity[u] == b.parity[v])
        throw NotABubble("not a bubble: color " + std::to_string(c + 1) + " joins two vertices of equal parity at " +
                         std::to_string(v));
    }
  }
}

Bubble make_bubble(int d, std::vector<std::vector<int>> colors, std::vector<int> parity) {
  Bubble b{d, std::move(colors), std::move(parity)};
  check_bubble(b);
  return b;
}

nlohmann::ordered_json bubble_to_json(const Bubble& b) {
  nlohmann::ordered_json j;
  j["dimension"] = b.d - 1;
  j["vertices"] = b.order();
  j["colors"] = b.colors;
  j["parity"] = b.parity;
  return j;
}

Bubble bubble_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("colors") || !j.contains("parity"))
      throw NotABubble("not a bubble: expected GEM-JSON with a \"parity\" array");
    Bubble b;
    b.colors = j.at("colors").get<std::vector<std::vector<int>>>();
    b.parity = j.at("parity").get<std::vector<int>>();
    b.d = static_cast<int>(b.colors.size());
    if (j.contains("dimension") && j.at("dimension").get<int>() != b.d - 1)
      throw NotABubble("not a bubble: dimension does not match the number of colors");
    if (j.contains("vertices") && j.at("vertices").get<int>() != b.order())
      throw NotABubble("not a bubble: vertex count does not match the parity array");
    check_bubble(b);
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw NotABubble(std::string("not a bubble: ") + e.what());
  }
}

Bubble quadratic_bubble(int d) {
  return make_bubble(d, std::vector<std::vector<int>>(d, {1, 0}), {1, 0});
}

Bubble quartic_bubble(int d, int m) {
  if (m < 1 || m > d) throw Error("quartic_bubble: color out of range");
  // 0, 1 white; 2, 3 black. Color m pairs 0-3 and 1-2, every other color 0-2 and 1-3.
  std::vector<std::vector<int>> colors(d, {2, 3, 0, 1});
  colors[m - 1] = {3, 2, 1, 0};
  return make_bubble(d, std::move(colors), {1, 1, 0, 0});
}

Bubble product(const Bubble& a, const Bubble& b) {
  if (a.d != b.d) throw Error("bubble product: color counts differ");
  Bubble out = a;
  const int shift = a.order();
  for (int c = 0; c < a.d; ++c)
    for (int u : b.colors[c]) out.colors[c].push_back(u + shift);
  out.parity.insert(out.parity.end(), b.parity.begin(), b.parity.end());
  return out;
}

std::vector<WickPairing> pairings(const Bubble& b) {
  auto blacks = b.blacks();
  std::vector<WickPairing> out;
  do {
    out.push_back(WickPairing{blacks});
  } while (std::next_permutation(blacks.begin(), blacks.end()));
  return out;
}

ColoredGraph feynman_graph(const Bubble& b, const WickPairing& sigma) {
  const auto whites = b.whites();
  if (sigma.black_of_white.size() != whites.size()) throw Error("feynman_graph: pairing has wrong size");
  std::vector<std::vector<int>> matchings;
  std::vector<int> zero(b.order(), -1);
  for (std::size_t k = 0; k < whites.size(); ++k) {
    const int w = whites[k];
    const int bl = sigma.black_of_white[k];
    if (bl < 0 || bl >= b.order() || b.parity[bl] != 0 || zero[bl] != -1) throw Error("feynman_graph: not a bijection onto black vertices");
    zero[w] = bl;
    zero[bl] = w;
  }
  matchings.push_back(std::move(zero));
  for (const auto& m : b.colors) matchings.push_back(m);
  return ColoredGraph(b.d, std::move(matchings));
}

int weight_exponent(const ColoredGraph& feynman) {
  const int d = feynman.dimension();
  int e = -feynman.half_order() * (d - 1);
  for (int c = 1; c <= d; ++c) e += residue_components(feynman, ColorSet::of({0, c})).count;
  return e;
}

LaurentPolynomial graph_weight(const ColoredGraph& feynman) {
  return LaurentPolynomial::monomial(weight_exponent(feynman));
}

LaurentPolynomial gaussian_mean(const Bubble& b, const MeanOptions& options) {
  check_bubble(b);
  if (b.half_order() > options.max_half_order)
    throw BudgetExceeded("gaussian_mean: p = " + std::to_string(b.half_order()) + " exceeds the budget of " +
                         std::to_string(options.max_half_order));
  LaurentPolynomial total;
  for (const auto& sigma : pairings(b)) total += graph_weight(feynman_graph(b, sigma));
  return total;
}

std::uint64_t bubble_automorphism_count(const Bubble& b) {
  check_bubble(b);
  const int n = b.order();
  std::uint64_t count = 0;
  std::vector<int> image(n);
  std::vector<int> queue;
  for (int target = 0; target < n; ++target) {
    if (b.parity[target] != b.parity[0]) continue;
    std::fill(image.begin(), image.end(), -1);
    image[0] = target;
    queue.assign(1, 0);
    bool ok = true;
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      const int v = queue[head];
      for (int c = 0; ok && c < b.d; ++c) {
        const int u = b.colors[c][v];
        const int mapped = b.colors[c][image[v]];
        if (image[u] == -1) {
          image[u] = mapped;
          queue.push_back(u);
        } else {
          ok = image[u] == mapped;
        }
      }
    }
    if (!ok || static_cast<int>(queue.size()) != n) continue;
    std::vector<int> hit(n, 0);
    for (int v = 0; v < n && ok; ++v) ok = !hit[image[v]]++;
    if (ok) ++count;
  }
  return count;
}

namespace {

long long bubble_exponent(int d, long long degree_x2) {
  const long long f = factorial(d - 2);
  if (degree_x2 % f) throw IdentityViolation("bubble degree is not a multiple of (d-2)!/2");
  return d - 1 - degree_x2 / f;
}

long long degree_x2(const ColoredGraph& g) {
  return g.dimension() < 2 ? 0 : gurau_degree(g).gurau_degree_x2;
}

}  // namespace

AmplitudeSpec amplitude_spec(const Bubble& b, std::string name) {
  check_bubble(b);
  const auto g = b.graph();
  if (!is_connected(g)) throw Error("amplitude_spec: bubble is not connected");
  AmplitudeSpec spec;
  spec.bubble = b;
  spec.name = std::move(name);
  spec.automorphisms = bubble_automorphism_count(b);
  spec.degree = HalfInt{degree_x2(g)};
  spec.exponent = bubble_exponent(b.d, spec.degree.x2);
  return spec;
}

IdentityRecord amplitude_exponent_check(const std::vector<Bubble>& bubbles, const ColoredGraph& feynman) {
  const int d = feynman.dimension();
  if (d < 2) throw Error("amplitude_exponent_check: needs at least two bubble colors");
  if (!is_connected(feynman)) throw Error("amplitude_exponent_check: Feynman graph is disconnected");

  std::vector<std::vector<int>> expected;
  for (const auto& b : bubbles) {
    if (b.d != d) throw Error("amplitude_exponent_check: bubble color count differs from the graph");
    for (const auto& comp : residue_graphs(b.graph(), ColorSet::full(d))) expected.push_back(canonical_code(comp.graph));
  }
  std::vector<std::vector<int>> found;
  long long lhs = weight_exponent(feynman);
  for (const auto& res : residue_graphs(feynman, ColorSet::full(d + 1).without(0))) {
    found.push_back(canonical_code(res.graph));
    lhs += bubble_exponent(d, degree_x2(res.graph));
  }
  std::sort(expected.begin(), expected.end());
  std::sort(found.begin(), found.end());
  if (expected != found) throw Error("amplitude_exponent_check: bubbles do not match the 0-hat residues");

  const long long omega_x2 = gurau_degree(feynman).gurau_degree_x2;
  const long long f = factorial(d - 1);
  if (omega_x2 % f) throw IdentityViolation("amplitude_exponent_check: degree is not a multiple of (d-1)!/2");
  const long long rhs = d - omega_x2 / f;
  IdentityRecord rec{"amplitude_exponent", HalfInt::whole(lhs), HalfInt::whole(rhs), lhs == rhs, true, ""};
  if (!rec.pass)
    throw IdentityViolation("amplitude_exponent_check: " + std::to_string(lhs) + " != " + std::to_string(rhs));
  return rec;
}

void check_covariance(const CovarianceSpec& cov) {
  if (cov.m < 1) throw Error("covariance: dimension must be positive");
  if (static_cast<int>(cov.inverse.size()) != cov.m) throw Error("covariance: expected an m x m matrix");
  for (int i = 0; i < cov.m; ++i) {
    if (static_cast<int>(cov.inverse[i].size()) != cov.m) throw Error("covariance: expected an m x m matrix");
    for (int j = 0; j < i; ++j)
      if (cov.inverse[i][j] != cov.inverse[j][i]) throw Error("covariance: matrix is not symmetric");
  }
}

CovarianceSpec covariance_from_json(const nlohmann::json& j) {
  const nlohmann::json& rows = j.is_object() ? j.at("inverse") : j;
  if (!rows.is_array()) throw Error("covariance: expected a matrix");
  CovarianceSpec cov;
  cov.m = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error("covariance: expected a matrix");
    std::vector<Rational> out;
    for (const auto& x : row) {
      if (x.is_number_integer()) {
        out.emplace_back(x.get<long long>());
      } else if (x.is_string()) {
        try {
          out.emplace_back(Rational(x.get<std::string>()));
        } catch (const std::exception&) {
          throw Error("covariance: bad rational '" + x.get<std::string>() + "'");
        }
      } else {
        throw Error("covariance: entries must be integers or \"p/q\" strings");
      }
    }
    cov.inverse.push_back(std::move(out));
  }
  check_covariance(cov);
  return cov;
}

std::string WickVectorResult::str() const {
  if (monomials.empty()) return "0";
  std::string out;
  for (const auto& [pairs, count] : monomials) {
    if (!out.empty()) out += " + ";
    std::string term = count == 1 ? "" : count.str();
    for (const auto& [i, j] : pairs) {
      if (!term.empty()) term += "*";
      term += "Cinv[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    out += term.empty() ? "1" : term;
  }
  return out;
}

namespace {

void wick_recurse(std::vector<int>& rest, std::vector<std::pair<int, int>>& chosen,
                  std::map<std::vector<std::pair<int, int>>, BigInt>& out) {
  if (rest.empty()) {
    auto key = chosen;
    std::sort(key.begin(), key.end());
    out[key] += 1;
    return;
  }
  const int first = rest.front();
  for (std::size_t k = 1; k < rest.size(); ++k) {
    const int partner = rest[k];
    std::vector<int> next;
    for (std::size_t t = 1; t < rest.size(); ++t)
      if (t != k) next.push_back(rest[t]);
    chosen.emplace_back(std::min(first, partner), std::max(first, partner));
    wick_recurse(next, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

WickVectorResult wick_vector(const std::vector<int>& indices, const CovarianceSpec& cov) {
  check_covariance(cov);
  for (int i : indices)
    if (i < 1 || i > cov.m) throw Error("wick_vector: index " + std::to_string(i) + " out of range 1.." + std::to_string(cov.m));
  WickVectorResult r;
  r.value = 0;
  if (indices.size() % 2) return r;
  if (indices.size() > 16) throw BudgetExceeded("wick_vector: more than 16 factors");
  std::vector<int> rest = indices;
  std::vector<std::pair<int, int>> chosen;
  wick_recurse(rest, chosen, r.monomials);
  for (const auto& [pairs, count] : r.monomials) {
    Rational term = Rational(count);
    for (const auto& [i, j] : pairs) term *= cov.inverse[i - 1][j - 1];
    r.value += term;
  }
  return r;
}

}  // namespace gem
