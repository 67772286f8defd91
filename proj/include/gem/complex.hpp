#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gem/colored_graph.hpp"
#include "gem/moves.hpp"

namespace gem {

/// Simplex counts N_0..N_d of the dual pseudocomplex.
struct FaceVector {
  std::vector<long long> counts;
};

FaceVector face_vector(const ColoredGraph& g);
long long euler_characteristic(const ColoredGraph& g);

enum class Cert { Yes, No, Unknown };

const char* to_string(Cert c);

/// Tri-state certification result with a checkable witness.
struct CertStatus {
  Cert status = Cert::Unknown;
  /// dipole_reduction | regular_genus_zero | euler_characteristic | surface |
  /// non_bipartite | failing_residue | all_residues | none
  std::string witness_kind = "none";
  std::string detail;
  std::vector<Dipole> moves;           // dipole_reduction
  std::optional<std::vector<int>> jacket;  // regular_genus_zero
  std::optional<long long> value;      // Euler characteristic or genus
  std::optional<ColoredGraph> residue;  // failing_residue
  std::optional<ColorSet> residue_colors;

  bool yes() const { return status == Cert::Yes; }
  bool no() const { return status == Cert::No; }
};

/// Thread-safe memo of sphere statuses keyed by canonical census line.
class SphereMemo {
 public:
  std::optional<Cert> find(const std::string& key) const;
  void store(const std::string& key, Cert status);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Cert> map_;
};

struct CertOptions {
  /// Dipole moves allowed per vertex of the input before giving up.
  int move_budget_per_vertex = 10;
  /// When set, residue certifications inside certify_gem are memoized here.
  SphereMemo* memo = nullptr;
};

/// Decides whether |K(g)| is a PL sphere, when it can.
///
/// d = 1 is always a circle and d = 2 is decided by the Euler characteristic.
/// For d >= 3 the graph must first certify as a gem; a sphere is then
/// witnessed by regular genus zero on a bipartite gem or by dipole reduction
/// to the standard graph. A "No" needs an obstruction (non-orientability,
/// wrong Euler characteristic, or a failing residue).
CertStatus certify_sphere(const ColoredGraph& g, const CertOptions& options = {});

/// Checks that every d-residue represents a (d-1)-sphere. Exact for d <= 3.
CertStatus certify_gem(const ColoredGraph& g, const CertOptions& options = {});

/// d = 4 only: every 3-residue has genus zero (exact).
CertStatus certify_singular4(const ColoredGraph& g);

}  // namespace gem
