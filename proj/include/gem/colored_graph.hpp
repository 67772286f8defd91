#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gem {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit (order, pairing count, index space) was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Subset of the color set {0, ..., d} stored as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}

  static ColorSet full(int num_colors) { return ColorSet((1u << num_colors) - 1u); }
  static ColorSet single(int color) { return ColorSet(1u << color); }
  static ColorSet of(std::initializer_list<int> colors) {
    ColorSet s;
    for (int c : colors) s = s.with(c);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int color) const { return (bits_ >> color) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  constexpr ColorSet with(int color) const { return ColorSet(bits_ | (1u << color)); }
  constexpr ColorSet without(int color) const { return ColorSet(bits_ & ~(1u << color)); }
  /// Complement inside {0, ..., num_colors - 1}.
  ColorSet complement(int num_colors) const { return ColorSet(full(num_colors).bits_ & ~bits_); }
  bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<int> colors() const;

  constexpr bool operator==(const ColorSet&) const = default;
  constexpr auto operator<=>(const ColorSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Raw, unvalidated graph data as read from a file.
struct GraphData {
  int dimension = 0;
  int vertices = 0;
  std::vector<std::vector<int>> colors;
};

struct Violation {
  int color = -1;   // -1 when the violation is not tied to a color
  int vertex = -1;  // -1 when the violation is not tied to a vertex
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks every structural invariant of a (d+1)-colored graph. Never throws.
ValidationReport validate(const GraphData& data);

class InvalidGraph : public Error {
 public:
  explicit InvalidGraph(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A (d+1)-regular, properly edge-colored multigraph without loops.
///
/// Stored as one fixed-point-free involution per color: partner(c, v) is the
/// vertex joined to v by the c-colored edge. Vertices are dense 0-based
/// indices. Instances are immutable once constructed.
class ColoredGraph {
 public:
  /// Validates and throws InvalidGraph on failure.
  explicit ColoredGraph(const GraphData& data);
  ColoredGraph(int dimension, std::vector<std::vector<int>> matchings);

  /// Skips validation. The caller guarantees the invariants hold.
  static ColoredGraph unchecked(int dimension, std::vector<std::vector<int>> matchings);

  /// The graph on two vertices with all d+1 edges between them.
  static ColoredGraph standard(int dimension);

  int dimension() const { return dimension_; }
  int num_colors() const { return dimension_ + 1; }
  int order() const { return static_cast<int>(matchings_.front().size()); }
  /// p, where the order is 2p.
  int half_order() const { return order() / 2; }

  int partner(int color, int vertex) const { return matchings_[color][vertex]; }
  std::span<const int> matching(int color) const { return matchings_[color]; }
  const std::vector<std::vector<int>>& matchings() const { return matchings_; }

  /// Colors of all edges joining u and v.
  ColorSet colors_between(int u, int v) const;

  GraphData data() const;

  bool operator==(const ColoredGraph&) const = default;

 private:
  ColoredGraph() = default;
  int dimension_ = 0;
  std::vector<std::vector<int>> matchings_;
};

/// Disjoint union; the vertices of b are shifted by a.order().
ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

/// Renames vertices: the result maps new_label[v] to new_label[partner(c, v)].
ColoredGraph relabel(const ColoredGraph& g, std::span<const int> new_label);

/// Renames colors: color c of g becomes color color_map[c] of the result.
ColoredGraph permute_colors(const ColoredGraph& g, std::span<const int> color_map);

/// Every fixed-point-free involution on {0, ..., vertices-1}, in lexicographic order.
std::vector<std::vector<int>> all_perfect_matchings(int vertices);

}  // namespace gem
