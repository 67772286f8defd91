#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/complex.hpp"
#include "gem/invariants.hpp"
#include "json.hpp"

namespace gem {

/// Worker count: GEM_THREADS if set and positive, else hardware concurrency.
int thread_count();

/// Largest order enumerate() accepts by default: 12 for d = 2, 10 for d = 3, 8 for d = 4.
int default_order_budget(int dimension);

struct EnumerateOptions {
  int dimension = 3;
  int max_order = 2;
  bool bipartite_only = false;
  bool crystallizations_only = false;
  bool connected_only = true;
  /// Overrides default_order_budget when set.
  std::optional<int> order_budget;
  /// 0 means thread_count().
  int threads = 0;
};

/// One representative per color-preserving isomorphism class, for every even
/// order 2..max_order, in canonical form and sorted by (order, code).
/// Throws BudgetExceeded when max_order is over budget.
std::vector<ColoredGraph> enumerate_graphs(const EnumerateOptions& options);

struct CatalogRecord {
  std::string code;  // census line of the canonical graph
  ColoredGraph graph;
  int dimension = 0;
  int order = 0;
  bool connected = true;
  bool bipartite = false;
  bool crystallization = false;
  long long degree_x2 = 0;
  long long regular_genus_x2 = 0;
  long long euler = 0;
  Cert gem = Cert::Unknown;
  Cert sphere = Cert::Unknown;
  std::optional<Cert> singular4;  // d = 4 only
  /// 2 * omega of every component of every 0..d-hat residue, sorted.
  std::vector<long long> residue_degrees_x2;
  std::uint64_t automorphisms = 0;
  std::vector<std::string> hints;

  HalfInt degree() const { return HalfInt{degree_x2}; }
  int half_order() const { return order / 2; }
};

/// Computes every record field. Invariants are only filled for connected graphs.
CatalogRecord make_record(const ColoredGraph& g, SphereMemo* memo = nullptr);

/// enumerate_graphs followed by make_record, in the same order.
std::vector<CatalogRecord> enumerate(const EnumerateOptions& options);
std::vector<CatalogRecord> make_records(const std::vector<ColoredGraph>& graphs, int threads = 0);

nlohmann::ordered_json record_to_json(const CatalogRecord& r);

/// Gurau degree -> number of connected records.
std::map<HalfInt, long long> degree_spectrum(const std::vector<CatalogRecord>& records);

struct ClassificationRule {
  std::string id;
  int dimension = 0;
  std::string predicate;
  std::vector<std::string> candidates;
  std::string anchor;
  /// False for rules whose hypotheses cannot occur at enumerable orders.
  bool testable = true;
};

const std::vector<ClassificationRule>& rule_table();
/// Rules whose hypotheses hold for the record. Documentation-only rules never fire.
std::vector<const ClassificationRule*> classify_hints(const CatalogRecord& r);

struct MinimaBucket {
  std::string status;  // e.g. "gem=yes sphere=unknown"
  long long euler = 0;
  bool bipartite = false;
  std::vector<long long> residue_degrees_x2;
  std::uint64_t automorphisms = 0;

  long long count = 0;
  long long min_degree_x2 = 0;
  int min_order = 0;
  /// First record (in census order) attaining min_degree_x2.
  std::string witness;
};

/// Minimum degree and order per invariant fingerprint. Values are minima over
/// the enumerated orders only.
std::vector<MinimaBucket> census_minima(const std::vector<CatalogRecord>& records);
std::string bucket_status(const CatalogRecord& r);

/// Named theorem checks run over a census: name -> (checked, failed).
struct SweepResult {
  std::map<std::string, std::pair<long long, long long>> checks;
  std::vector<std::string> failures;  // first few failing codes with check names
  bool ok() const;
};

SweepResult sweep_checks(const std::vector<CatalogRecord>& records);

/// graphs.txt body: one census line per record.
std::string census_lines(const std::vector<CatalogRecord>& records);
/// index.json contents: counts, spectrum, rule statistics, minima and checks.
nlohmann::ordered_json census_index(const EnumerateOptions& options, const std::vector<CatalogRecord>& records,
                                    const SweepResult& sweep);

}  // namespace gem
