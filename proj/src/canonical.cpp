#include "gem/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "gem/io.hpp"
#include "gem/residues.hpp"

namespace gem {
namespace {

// Replaces each signature by its rank among the distinct signatures.
template <typename Sig>
int rank_signatures(const std::vector<Sig>& sigs, std::vector<int>& cls) {
  std::vector<Sig> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  cls.resize(sigs.size());
  for (std::size_t v = 0; v < sigs.size(); ++v)
    cls[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
  return static_cast<int>(sorted.size());
}

// Isomorphism-invariant vertex classes: bicolored cycle lengths through each
// vertex, refined by the classes of the neighbors along every color.
std::vector<int> refined_classes(const ColoredGraph& g) {
  const int n = g.order();
  const int k = g.num_colors();
  std::vector<std::vector<int>> sigs(n);
  std::vector<int> seen(n);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cycle;
        int v = s;
        bool use_i = true;
        do {
          if (!seen[v]) {
            seen[v] = 1;
            cycle.push_back(v);
          }
          v = g.partner(use_i ? i : j, v);
          use_i = !use_i;
        } while (v != s || !use_i);
        for (int w : cycle) sigs[w].push_back(static_cast<int>(cycle.size()));
      }
    }
  }
  std::vector<int> cls;
  int num = rank_signatures(sigs, cls);
  for (;;) {
    std::vector<std::vector<int>> next(n);
    for (int v = 0; v < n; ++v) {
      next[v].reserve(k + 1);
      next[v].push_back(cls[v]);
      for (int c = 0; c < k; ++c) next[v].push_back(cls[g.partner(c, v)]);
    }
    std::vector<int> refined;
    const int num_next = rank_signatures(next, refined);
    cls = std::move(refined);
    if (num_next == num) break;
    num = num_next;
  }
  return cls;
}

// Labels vertices in BFS discovery order from root, scanning colors ascending.
void bfs_labels(const ColoredGraph& g, int root, std::vector<int>& label, std::vector<int>& order) {
  const int n = g.order();
  label.assign(n, -1);
  order.clear();
  label[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    for (int c = 0; c < g.num_colors(); ++c) {
      const int w = g.partner(c, v);
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
    }
  }
}

std::vector<int> body_code(const ColoredGraph& g, const std::vector<int>& label, const std::vector<int>& order) {
  const int n = g.order();
  std::vector<int> body;
  body.reserve(static_cast<std::size_t>(n) * g.num_colors());
  for (int c = 0; c < g.num_colors(); ++c)
    for (int i = 0; i < n; ++i) body.push_back(label[g.partner(c, order[i])]);
  return body;
}

struct ConnectedCanon {
  std::vector<int> body;
  std::vector<int> relabel;
  std::uint64_t automorphisms = 0;
};

ConnectedCanon canonical_connected(const ColoredGraph& g) {
  const auto cls = refined_classes(g);
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < g.order(); ++v) cells[cls[v]].push_back(v);
  const std::vector<int>* target = nullptr;
  for (const auto& [id, members] : cells)
    if (!target || members.size() < target->size()) target = &members;

  ConnectedCanon best;
  std::vector<int> label, order;
  for (int root : *target) {
    bfs_labels(g, root, label, order);
    auto body = body_code(g, label, order);
    if (best.automorphisms == 0 || body < best.body) {
      best.body = std::move(body);
      best.relabel = label;
      best.automorphisms = 1;
    } else if (body == best.body) {
      ++best.automorphisms;
    }
  }
  return best;
}

struct ComponentCanon {
  std::vector<int> vertices;
  ConnectedCanon canon;
};

std::vector<ComponentCanon> canonical_components(const ColoredGraph& g) {
  const auto comps = residue_components(g, ColorSet::full(g.num_colors()));
  std::vector<ComponentCanon> out;
  if (comps.count == 1) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    out.push_back({std::move(all), canonical_connected(g)});
    return out;
  }
  for (auto& group : comps.groups()) {
    auto sub = extract_residue(g, ColorSet::full(g.num_colors()), group);
    out.push_back({std::move(group), canonical_connected(sub.graph)});
  }
  std::stable_sort(out.begin(), out.end(), [](const ComponentCanon& a, const ComponentCanon& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.canon.body < b.canon.body;
  });
  return out;
}

CanonicalForm canonical_fixed_colors(const ColoredGraph& g) {
  CanonicalForm f;
  f.relabel.assign(g.order(), -1);
  int offset = 0;
  for (const auto& comp : canonical_components(g)) {
    for (std::size_t k = 0; k < comp.vertices.size(); ++k)
      f.relabel[comp.vertices[k]] = offset + comp.canon.relabel[k];
    offset += static_cast<int>(comp.vertices.size());
  }
  const ColoredGraph h = relabel(g, f.relabel);
  f.code = {g.dimension(), g.order()};
  for (int c = 0; c < h.num_colors(); ++c)
    f.code.insert(f.code.end(), h.matching(c).begin(), h.matching(c).end());
  f.color_map.resize(g.num_colors());
  std::iota(f.color_map.begin(), f.color_map.end(), 0);
  return f;
}

}  // namespace

std::string CanonicalForm::text() const { return to_census_line(graph()); }

ColoredGraph CanonicalForm::graph() const {
  const int d = code[0], n = code[1];
  std::vector<std::vector<int>> m(d + 1);
  for (int c = 0; c <= d; ++c) m[c].assign(code.begin() + 2 + c * n, code.begin() + 2 + (c + 1) * n);
  return ColoredGraph::unchecked(d, std::move(m));
}

CanonicalForm canonical_form(const ColoredGraph& g, const CanonicalOptions& options) {
  if (!options.permute_colors) return canonical_fixed_colors(g);
  std::vector<int> perm(g.num_colors());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<CanonicalForm> best;
  do {
    auto f = canonical_fixed_colors(permute_colors(g, perm));
    if (!best || f.code < best->code) {
      f.color_map = perm;
      best = std::move(f);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

std::vector<int> canonical_code(const ColoredGraph& g) { return canonical_form(g).code; }

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  return a.dimension() == b.dimension() && a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

std::uint64_t automorphism_count(const ColoredGraph& g, int max_order) {
  if (g.order() > max_order)
    throw OrderLimitExceeded("automorphism_count: order " + std::to_string(g.order()) + " exceeds limit " +
                             std::to_string(max_order));
  const auto comps = canonical_components(g);
  std::uint64_t total = 1;
  auto mul = [&](std::uint64_t x) {
    if (x != 0 && total > UINT64_MAX / x) throw Error("automorphism_count: overflow");
    total *= x;
  };
  for (std::size_t i = 0; i < comps.size();) {
    std::size_t j = i;
    while (j < comps.size() && comps[j].vertices.size() == comps[i].vertices.size() &&
           comps[j].canon.body == comps[i].canon.body)
      ++j;
    const auto copies = static_cast<std::uint64_t>(j - i);
    for (std::uint64_t k = 2; k <= copies; ++k) mul(k);
    for (std::size_t k = i; k < j; ++k) mul(comps[k].canon.automorphisms);
    i = j;
  }
  return total;
}

}  // namespace gem
