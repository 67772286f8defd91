#include "gem/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "gem/canonical.hpp"
#include "gem/io.hpp"
#include "gem/residues.hpp"
#include "gem/tensor_model.hpp"
#include "gem/union_find.hpp"

namespace gem {

int thread_count() {
  if (const char* env = std::getenv("GEM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

int default_order_budget(int dimension) {
  switch (dimension) {
    case 2: return 12;
    case 3: return 10;
    case 4: return 8;
    default: return 0;
  }
}

namespace {

void run_parallel(int threads, std::size_t tasks, const std::function<void(std::size_t, int)>& body) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::size_t>(tasks, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&](int id) {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks;) body(t, id);
  };
  if (threads == 1) {
    worker(0);
    return;
  }
  std::vector<std::thread> pool;
  for (int id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  for (auto& t : pool) t.join();
}

void partitions_rec(int rest, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(rest, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(rest - part, part, cur, out);
    cur.pop_back();
  }
}

// Color 1 closes the color-0 pairs into bicolored cycles of the given lengths.
std::vector<int> color_one(const std::vector<int>& parts, int n) {
  std::vector<int> m(n);
  int start = 0;
  for (int t : parts) {
    for (int k = 0; k < t; ++k) {
      const int a = 2 * (start + k) + 1;
      const int b = 2 * (start + (k + 1) % t);
      m[a] = b;
      m[b] = a;
    }
    start += t;
  }
  return m;
}

bool connected_raw(const std::vector<std::vector<int>>& m, ColorSet colors, int n) {
  UnionFind uf(n);
  for (int c : colors.colors())
    for (int v = 0; v < n; ++v) uf.unite(v, m[c][v]);
  return uf.num_sets() == 1;
}

bool bipartite_raw(const std::vector<std::vector<int>>& m, int n) {
  std::vector<int> side(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& mc : m) {
        const int u = mc[v];
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string pack(const std::vector<int>& code) {
  std::string out(code.size(), '\0');
  for (std::size_t i = 0; i < code.size(); ++i) out[i] = static_cast<char>(code[i]);
  return out;
}

std::vector<int> unpack(const std::string& key) {
  std::vector<int> code(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) code[i] = static_cast<unsigned char>(key[i]);
  return code;
}

}  // namespace

std::vector<ColoredGraph> enumerate_graphs(const EnumerateOptions& o) {
  const int d = o.dimension;
  if (d < 2 || d > 4) throw Error("enumerate: dimension must be 2, 3 or 4");
  if (o.max_order < 2 || o.max_order % 2) throw Error("enumerate: max order must be even and at least 2");
  const int budget = o.order_budget.value_or(default_order_budget(d));
  if (o.max_order > budget)
    throw BudgetExceeded("enumerate: order " + std::to_string(o.max_order) + " exceeds the budget of " +
                         std::to_string(budget) + " for d = " + std::to_string(d));
  if (o.max_order > 255) throw BudgetExceeded("enumerate: order too large");
  const int threads = o.threads > 0 ? o.threads : thread_count();
  const ColorSet all = ColorSet::full(d + 1);

  std::vector<std::string> keys;
  for (int n = 2; n <= o.max_order; n += 2) {
    const int p = n / 2;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_rec(p, p, cur, parts);
    const auto all_matchings = all_perfect_matchings(n);
    const std::size_t m_count = all_matchings.size();

    std::vector<int> zero(n);
    for (int v = 0; v < n; ++v) zero[v] = v ^ 1;

    // One task per (cycle type of colors 0 and 1, matching of color 2).
    const std::size_t tasks = parts.size() * m_count;
    std::vector<std::unordered_set<std::string>> local(threads);
    run_parallel(threads, tasks, [&](std::size_t task, int id) {
      std::vector<std::vector<int>> m(d + 1);
      m[0] = zero;
      m[1] = color_one(parts[task / m_count], n);
      m[2] = all_matchings[task % m_count];
      const int free_colors = d - 2;
      std::vector<std::size_t> idx(free_colors, 0);
      for (;;) {
        for (int k = 0; k < free_colors; ++k) m[3 + k] = all_matchings[idx[k]];
        bool keep = true;
        if (o.connected_only && !connected_raw(m, all, n)) keep = false;
        if (keep && o.bipartite_only && !bipartite_raw(m, n)) keep = false;
        if (keep && o.crystallizations_only)
          for (int i = 0; keep && i <= d; ++i) keep = connected_raw(m, all.without(i), n);
        if (keep) local[id].insert(pack(canonical_code(ColoredGraph::unchecked(d, m))));
        int k = 0;
        while (k < free_colors && ++idx[k] == m_count) idx[k++] = 0;
        if (k == free_colors) break;
      }
    });
    std::unordered_set<std::string> merged;
    for (auto& s : local) merged.insert(s.begin(), s.end());
    std::vector<std::string> sorted(merged.begin(), merged.end());
    std::sort(sorted.begin(), sorted.end());
    keys.insert(keys.end(), sorted.begin(), sorted.end());
  }

  std::vector<ColoredGraph> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(CanonicalForm{unpack(key), {}, {}}.graph());
  return out;
}

CatalogRecord make_record(const ColoredGraph& input, SphereMemo* memo) {
  const auto form = canonical_form(input);
  CatalogRecord r{form.text(), form.graph()};
  const ColoredGraph& g = r.graph;
  const int d = g.dimension();
  r.dimension = d;
  r.order = g.order();
  r.connected = is_connected(g);
  r.automorphisms = automorphism_count(g, 64);
  if (!r.connected) {
    r.bipartite = !has_odd_cycle(g);
    return r;
  }
  r.bipartite = is_bipartite(g).bipartite;
  const ResidueCensus census(g);
  r.crystallization = census.sum_hats() == d + 1;
  if (d >= 2) {
    const auto report = gurau_degree(g);
    r.degree_x2 = report.gurau_degree_x2;
    r.regular_genus_x2 = report.regular_genus_x2;
  }
  r.euler = euler_characteristic(g);
  CertOptions opts;
  opts.memo = memo;
  r.gem = certify_gem(g, opts).status;
  r.sphere = certify_sphere(g, opts).status;
  if (d == 4) r.singular4 = certify_singular4(g).status;
  const ColorSet all = ColorSet::full(g.num_colors());
  for (int i = 0; i <= d; ++i)
    for (const auto& res : residue_graphs(g, all.without(i)))
      r.residue_degrees_x2.push_back(res.graph.dimension() >= 2 ? gurau_degree(res.graph).gurau_degree_x2 : 0);
  std::sort(r.residue_degrees_x2.begin(), r.residue_degrees_x2.end());
  for (const auto* rule : classify_hints(r)) r.hints.push_back(rule->id);
  return r;
}

std::vector<CatalogRecord> make_records(const std::vector<ColoredGraph>& graphs, int threads) {
  if (threads <= 0) threads = thread_count();
  std::vector<std::optional<CatalogRecord>> slots(graphs.size());
  SphereMemo memo;
  run_parallel(threads, graphs.size(), [&](std::size_t i, int) { slots[i] = make_record(graphs[i], &memo); });
  std::vector<CatalogRecord> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<CatalogRecord> enumerate(const EnumerateOptions& options) {
  return make_records(enumerate_graphs(options), options.threads);
}

nlohmann::ordered_json record_to_json(const CatalogRecord& r) {
  nlohmann::ordered_json j;
  j["code"] = r.code;
  j["dimension"] = r.dimension;
  j["order"] = r.order;
  j["connected"] = r.connected;
  j["bipartite"] = r.bipartite;
  j["automorphisms"] = r.automorphisms;
  if (!r.connected) return j;
  j["crystallization"] = r.crystallization;
  j["gurau_degree_x2"] = r.degree_x2;
  j["regular_genus_x2"] = r.regular_genus_x2;
  j["euler"] = r.euler;
  j["gem"] = to_string(r.gem);
  j["sphere"] = to_string(r.sphere);
  if (r.singular4) j["singular4"] = to_string(*r.singular4);
  j["residue_degrees_x2"] = r.residue_degrees_x2;
  j["hints"] = r.hints;
  return j;
}

std::map<HalfInt, long long> degree_spectrum(const std::vector<CatalogRecord>& records) {
  std::map<HalfInt, long long> out;
  for (const auto& r : records)
    if (r.connected) ++out[r.degree()];
  return out;
}

const std::vector<ClassificationRule>& rule_table() {
  static const std::vector<ClassificationRule> table = {
      {"R3a", 3, "3-manifold gem with degree <= 2", {"S^3"}, "degree <= 2 implies S^3"},
      {"R3b", 3, "3-manifold gem with degree <= 5",
       {"S^3", "S^1xS^2", "S^1~xS^2", "L(2,1)", "L(3,1)"},
       "degree <= 5 implies one of five 3-manifolds"},
      {"R3g", 3, "geometric type from degree thresholds 10/13/14", {}, "needs crystallization catalogues up to order 32",
       false},
      {"R4a", 4, "bipartite 4-manifold gem with degree in {0, 6}", {"S^4"}, "degree 0 or 6 implies S^4"},
      {"R4b", 4, "bipartite 4-manifold gem with degree in {12, 18}", {"S^4", "S^1xS^3"},
       "degree 12 or 18 implies S^4 or S^1xS^3"},
      {"R4c", 4, "bipartite 4-manifold gem with degree in {24, 30}", {"S^4", "S^1xS^3", "CP^2", "#2(S^1xS^3)"},
       "degree 24 or 30 implies one of four 4-manifolds"},
      {"R4d", 4, "bipartite 4-manifold gem with degree in {36, 42}",
       {"S^4", "S^1xS^3", "CP^2", "#2(S^1xS^3)", "#3(S^1xS^3)", "(S^1xS^3)#CP^2"},
       "degree 36 or 42 implies one of six 4-manifolds"},
      {"R4n", 4, "non-bipartite 4-manifold gem with degree <= 35", {"S^1~xS^3", "#2(S^1~xS^3)"},
       "non-orientable, degree <= 35"},
      {"R4s", 4, "degree not divisible by 6", {}, "not a singular 4-manifold gem"},
      {"R4r", 4, "crystallization of a 4-manifold with some residue degree <= 2, or degree <= 3(p-1)+14",
       {"#r(S^1xS^3)", "#r(S^1~xS^3)"}, "connected sums of S^3 bundles over S^1"},
      {"R4k", 4, "degree of simply-connected crystallized families", {}, "needs crystallizations of order >= 134",
       false},
      {"R4x", 4, "exotic PL structures from degree values", {}, "statements only, no construction", false},
  };
  return table;
}

std::vector<const ClassificationRule*> classify_hints(const CatalogRecord& r) {
  std::vector<const ClassificationRule*> out;
  if (!r.connected) return out;
  const HalfInt w = r.degree();
  const bool gem = r.gem == Cert::Yes;
  auto in = [&](std::initializer_list<long long> values) {
    for (long long v : values)
      if (w == HalfInt::whole(v)) return true;
    return false;
  };
  for (const auto& rule : rule_table()) {
    if (!rule.testable || rule.dimension != r.dimension) continue;
    bool fire = false;
    const std::string& id = rule.id;
    if (id == "R3a") fire = gem && w <= HalfInt::whole(2);
    else if (id == "R3b") fire = gem && w <= HalfInt::whole(5);
    else if (id == "R4a") fire = gem && r.bipartite && in({0, 6});
    else if (id == "R4b") fire = gem && r.bipartite && in({12, 18});
    else if (id == "R4c") fire = gem && r.bipartite && in({24, 30});
    else if (id == "R4d") fire = gem && r.bipartite && in({36, 42});
    else if (id == "R4n") fire = gem && !r.bipartite && w <= HalfInt::whole(35);
    else if (id == "R4s") fire = !w.integral() || w.value() % 6 != 0;
    else if (id == "R4r") {
      const bool small_residue = std::any_of(r.residue_degrees_x2.begin(), r.residue_degrees_x2.end(),
                                             [](long long x2) { return x2 <= 4; });
      fire = gem && r.crystallization && (small_residue || w <= HalfInt::whole(3LL * (r.half_order() - 1) + 14));
    }
    if (fire) out.push_back(&rule);
  }
  return out;
}

std::string bucket_status(const CatalogRecord& r) {
  std::string s = std::string("gem=") + to_string(r.gem) + " sphere=" + to_string(r.sphere);
  if (r.singular4) s += std::string(" singular4=") + to_string(*r.singular4);
  return s;
}

std::vector<MinimaBucket> census_minima(const std::vector<CatalogRecord>& records) {
  using Key = std::tuple<std::string, long long, bool, std::vector<long long>, std::uint64_t>;
  std::map<Key, MinimaBucket> buckets;
  for (const auto& r : records) {
    if (!r.connected) continue;
    Key key{bucket_status(r), r.euler, r.bipartite, r.residue_degrees_x2, r.automorphisms};
    auto [it, fresh] = buckets.try_emplace(key);
    auto& b = it->second;
    if (fresh) {
      b.status = std::get<0>(key);
      b.euler = r.euler;
      b.bipartite = r.bipartite;
      b.residue_degrees_x2 = r.residue_degrees_x2;
      b.automorphisms = r.automorphisms;
      b.min_degree_x2 = r.degree_x2;
      b.min_order = r.order;
      b.witness = r.code;
    } else {
      if (r.degree_x2 < b.min_degree_x2) {
        b.min_degree_x2 = r.degree_x2;
        b.witness = r.code;
      }
      b.min_order = std::min(b.min_order, r.order);
    }
    ++b.count;
  }
  std::vector<MinimaBucket> out;
  for (auto& [key, b] : buckets) out.push_back(std::move(b));
  return out;
}

bool SweepResult::ok() const {
  for (const auto& [name, counts] : checks)
    if (counts.second) return false;
  return true;
}

SweepResult sweep_checks(const std::vector<CatalogRecord>& records) {
  SweepResult out;
  auto note = [&](const std::string& name, bool pass, const CatalogRecord& r) {
    auto& [checked, failed] = out.checks[name];
    ++checked;
    if (!pass) {
      ++failed;
      if (out.failures.size() < 20) out.failures.push_back(name + " " + r.code);
    }
  };
  for (const auto& r : records) {
    if (!r.connected) continue;
    const int d = r.dimension;
    const auto& g = r.graph;
    const long long half_fact_x2 = factorial(d - 1);  // 2 * (d-1)!/2
    note("degree_multiple", r.degree_x2 >= 0 && r.degree_x2 % half_fact_x2 == 0, r);
    note("dual_path", gurau_degree_x2_from_jackets(g) == gurau_degree_x2_from_pairs(ResidueCensus(g), g.half_order()), r);
    try {
      note("gurau_ryan", gurau_ryan_check(g).pass, r);
    } catch (const IdentityViolation&) {
      note("gurau_ryan", false, r);
    }
    if (r.bipartite && r.degree_x2 < factorial(d)) note("sphere_bound", r.sphere == Cert::Yes, r);
    if (!r.bipartite) note("non_bipartite_bound", r.degree_x2 >= 2 * ((factorial(d) + 3) / 4), r);
    if (r.crystallization) note("core_order_bound", (r.half_order() - 1) * factorial(d - 1) <= r.degree_x2, r);
    if (d == 2 && r.bipartite) note("orientable_genus_integral", r.degree_x2 % 2 == 0, r);
    if (d == 3) {
      try {
        for (const auto& rec : dim3_identity(g))
          if (rec.applicable) note(rec.name, rec.pass, r);
      } catch (const IdentityViolation&) {
        note("dim3_euler", false, r);
      }
      if (r.crystallization && r.gem == Cert::Yes) {
        const ResidueCensus census(g);
        bool triangles = true;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
              triangles = triangles && census.g_pair(i, j) + census.g_pair(j, k) + census.g_pair(k, i) == r.half_order() + 2;
        note("triangle_sum", triangles, r);
        note("genus_gap", genus_gap_dim3(g).pass, r);
      }
    }
    if (d == 4) {
      try {
        for (const auto& rec : dim4_identities(g))
          if (rec.applicable) note(rec.name, rec.pass, r);
      } catch (const IdentityViolation&) {
        note("dim4_relation1", false, r);
      }
    }
  }
  return out;
}

std::string census_lines(const std::vector<CatalogRecord>& records) {
  std::string out;
  for (const auto& r : records) out += r.code + "\n";
  return out;
}

nlohmann::ordered_json census_index(const EnumerateOptions& o, const std::vector<CatalogRecord>& records,
                                    const SweepResult& sweep) {
  using json = nlohmann::ordered_json;
  json j;
  j["format"] = "gem-census-1";
  j["dimension"] = o.dimension;
  j["max_order"] = o.max_order;
  j["filters"] = {{"bipartite_only", o.bipartite_only},
                  {"crystallizations_only", o.crystallizations_only},
                  {"connected_only", o.connected_only}};
  j["count"] = records.size();

  std::map<int, long long> by_order;
  for (const auto& r : records) ++by_order[r.order];
  json orders = json::object();
  for (const auto& [n, c] : by_order) orders[std::to_string(n)] = c;
  j["counts_by_order"] = orders;

  json spectrum = json::object();
  for (const auto& [w, c] : degree_spectrum(records)) spectrum[w.str()] = c;
  j["spectrum"] = spectrum;

  auto tally = [&](auto field) {
    json t = {{"yes", 0}, {"no", 0}, {"unknown", 0}};
    for (const auto& r : records)
      if (r.connected)
        if (const std::optional<Cert> c = field(r)) t[to_string(*c)] = t[to_string(*c)].template get<long long>() + 1;
    return t;
  };
  json cert;
  cert["gem"] = tally([](const CatalogRecord& r) { return std::optional<Cert>(r.gem); });
  cert["sphere"] = tally([](const CatalogRecord& r) { return std::optional<Cert>(r.sphere); });
  if (o.dimension == 4) cert["singular4"] = tally([](const CatalogRecord& r) { return r.singular4; });
  j["certification"] = cert;

  json rules = json::object();
  for (const auto& rule : rule_table()) {
    if (rule.dimension != o.dimension) continue;
    long long fired = 0;
    for (const auto& r : records) fired += std::count(r.hints.begin(), r.hints.end(), rule.id);
    rules[rule.id] = rule.testable ? json(fired) : json("not testable at enumerable orders");
  }
  j["rules"] = rules;

  json minima;
  minima["label"] = "minimum over order <= " + std::to_string(o.max_order);
  json buckets = json::array();
  for (const auto& b : census_minima(records)) {
    buckets.push_back({{"status", b.status},
                       {"euler", b.euler},
                       {"bipartite", b.bipartite},
                       {"residue_degrees_x2", b.residue_degrees_x2},
                       {"automorphisms", b.automorphisms},
                       {"count", b.count},
                       {"min_degree", HalfInt{b.min_degree_x2}.str()},
                       {"min_order", b.min_order},
                       {"witness", b.witness}});
  }
  minima["buckets"] = buckets;
  j["minima"] = minima;

  json checks = json::object();
  for (const auto& [name, counts] : sweep.checks) checks[name] = {{"checked", counts.first}, {"failed", counts.second}};
  j["checks"] = checks;
  j["failures"] = sweep.failures;
  j["ok"] = sweep.ok();
  return j;
}

}  // namespace gem
