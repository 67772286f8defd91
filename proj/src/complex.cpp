#include "gem/complex.hpp"

#include "gem/canonical.hpp"
#include "gem/invariants.hpp"
#include "gem/residues.hpp"

namespace gem {

FaceVector face_vector(const ColoredGraph& g) {
  const int k = g.num_colors();
  const int d = g.dimension();
  FaceVector fv;
  fv.counts.assign(d + 1, 0);
  const ResidueCensus census(g);
  for (unsigned bits = 1; bits < (1u << k); ++bits) {
    const ColorSet b(bits);
    const int simplex_dim = d - b.size();
    if (simplex_dim >= 0) fv.counts[simplex_dim] += census.count(b);
  }
  // The empty color set: one d-simplex per vertex.
  fv.counts[d] = g.order();
  return fv;
}

long long euler_characteristic(const ColoredGraph& g) {
  const auto fv = face_vector(g);
  long long chi = 0;
  for (std::size_t k = 0; k < fv.counts.size(); ++k) chi += (k % 2 ? -1 : 1) * fv.counts[k];
  return chi;
}

std::optional<Cert> SphereMemo::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  const auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void SphereMemo::store(const std::string& key, Cert status) {
  std::lock_guard lock(mutex_);
  map_.emplace(key, status);
}

std::size_t SphereMemo::size() const {
  std::lock_guard lock(mutex_);
  return map_.size();
}

const char* to_string(Cert c) {
  switch (c) {
    case Cert::Yes: return "yes";
    case Cert::No: return "no";
    case Cert::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

CertStatus make(Cert status, std::string kind, std::string detail) {
  CertStatus s;
  s.status = status;
  s.witness_kind = std::move(kind);
  s.detail = std::move(detail);
  return s;
}

}  // namespace

CertStatus certify_sphere(const ColoredGraph& g, const CertOptions& options) {
  if (!is_connected(g)) throw Error("certify_sphere: graph is disconnected");
  const int d = g.dimension();
  if (d == 1) return make(Cert::Yes, "surface", "bicolored cycle");
  if (d == 2) {
    const long long chi = euler_characteristic(g);
    auto s = make(chi == 2 ? Cert::Yes : Cert::No, "euler_characteristic", "surface with chi = " + std::to_string(chi));
    s.value = chi;
    return s;
  }

  auto gem_status = certify_gem(g, options);
  if (gem_status.no()) {
    gem_status.detail = "not a manifold gem: " + gem_status.detail;
    return gem_status;
  }
  if (!is_bipartite(g).bipartite) return make(Cert::No, "non_bipartite", "non-orientable");
  const long long chi = euler_characteristic(g);
  const long long sphere_chi = d % 2 ? 0 : 2;
  if (chi != sphere_chi) {
    auto s = make(Cert::No, "euler_characteristic", "chi = " + std::to_string(chi));
    s.value = chi;
    return s;
  }
  if (!gem_status.yes()) return make(Cert::Unknown, "none", "residues not certified");

  const auto reduced = reduce_dipoles(g, options.move_budget_per_vertex * g.order());
  if (reduced.graph.order() == 2) {
    auto s = make(Cert::Yes, "dipole_reduction", std::to_string(reduced.moves.size()) + " moves to the order-2 graph");
    s.moves = reduced.moves;
    return s;
  }
  const auto report = gurau_degree(g);
  if (report.regular_genus_x2 == 0) {
    for (const auto& j : report.jackets)
      if (j.genus_x2 == 0) {
        auto s = make(Cert::Yes, "regular_genus_zero", "genus-zero jacket");
        s.jacket = j.cycle;
        s.value = 0;
        return s;
      }
  }
  return make(Cert::Unknown, "none", "no certificate found");
}

CertStatus certify_gem(const ColoredGraph& g, const CertOptions& options) {
  if (g.dimension() == 1) return make(Cert::Yes, "all_residues", "residues are single edges");
  const ColorSet all = ColorSet::full(g.num_colors());
  bool unknown = false;
  for (int i = 0; i < g.num_colors(); ++i) {
    for (const auto& res : residue_graphs(g, all.without(i))) {
      // Residues of dimension >= 3 are certified in canonical labelling so the
      // outcome (and any memoized status) depends only on the isomorphism class.
      std::optional<ColoredGraph> canon;
      std::string key;
      const bool use_memo = options.memo && res.graph.dimension() >= 3;
      if (res.graph.dimension() >= 3) {
        const auto form = canonical_form(res.graph);
        if (use_memo) {
          key = form.text();
          if (const auto hit = options.memo->find(key); hit && *hit != Cert::No) {
            unknown = unknown || *hit != Cert::Yes;
            continue;
          }
        }
        canon = form.graph();
      }
      const auto s = certify_sphere(canon ? *canon : res.graph, options);
      if (use_memo) options.memo->store(key, s.status);
      if (s.no()) {
        auto out = make(Cert::No, "failing_residue",
                        "residue missing color " + std::to_string(i) + " is not a sphere (" + s.detail + ")");
        out.residue = res.graph;
        out.residue_colors = res.colors;
        return out;
      }
      unknown = unknown || !s.yes();
    }
  }
  if (unknown) return make(Cert::Unknown, "none", "some residue is not certified");
  return make(Cert::Yes, "all_residues", "every residue is a sphere");
}

CertStatus certify_singular4(const ColoredGraph& g) {
  if (g.dimension() != 4) throw Error("certify_singular4: needs a 5-colored graph");
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) {
        const ColorSet b = ColorSet::of({i, j, k});
        for (const auto& res : residue_graphs(g, b)) {
          const long long chi = euler_characteristic(res.graph);
          if (chi != 2) {
            auto out = make(Cert::No, "failing_residue",
                            "{" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                                "}-residue has chi = " + std::to_string(chi));
            out.value = chi;
            out.residue = res.graph;
            out.residue_colors = b;
            return out;
          }
        }
      }
  return make(Cert::Yes, "all_residues", "every 3-residue has genus zero");
}

}  // namespace gem
