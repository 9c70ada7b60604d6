#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgc/signed_graph.hpp"

namespace sgc {

using Color = int;

/// The palette M_q: {±1..±r} for q = 2r and {0, ±1..±r} for q = 2r + 1.
class ColorSet {
 public:
  explicit ColorSet(int q);

  int q() const { return q_; }
  int r() const { return q_ / 2; }
  bool includes_zero() const { return q_ % 2 == 1; }
  bool contains(Color c) const;
  /// Search order: 0 (odd q only), 1, -1, 2, -2, ...
  std::vector<Color> colors() const;

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  int q_;
};

ColorSet color_set(int q);

enum class Endpoint { First, Second };

struct Incidence {
  EdgeIndex edge;
  Endpoint endpoint;
};

/// Colors of the two incidences of one edge, in edge-list endpoint order.
struct EdgeColors {
  Color first = 0;
  Color second = 0;

  friend bool operator==(const EdgeColors&, const EdgeColors&) = default;
};

/// Forced pair for color c at the first endpoint: (c, c) on a negative edge,
/// (c, -c) on a positive one. Throws std::out_of_range if c is not in palette.
EdgeColors edge_assignment(Sign sign, Color c, const ColorSet& palette);

/// An assignment of palette colors to the incidences of a graph. Does not own
/// the graph; checks take the graph explicitly.
class IncidenceColoring {
 public:
  IncidenceColoring(ColorSet palette, std::vector<EdgeColors> colors);
  IncidenceColoring(ColorSet palette, std::size_t edge_count);

  const ColorSet& palette() const { return palette_; }
  std::size_t edge_count() const { return colors_.size(); }
  std::span<const EdgeColors> colors() const { return colors_; }
  const EdgeColors& at(EdgeIndex e) const { return colors_.at(e); }
  Color at(Incidence i) const;
  /// Color of the incidence (v, e); v must be an endpoint of e.
  Color at(const SignedGraph& g, Vertex v, EdgeIndex e) const;

  void set(EdgeIndex e, EdgeColors c) { colors_.at(e) = c; }

  /// Largest |color| used.
  int max_level() const;

  friend bool operator==(const IncidenceColoring&, const IncidenceColoring&) = default;

 private:
  ColorSet palette_;
  std::vector<EdgeColors> colors_;
};

struct Violation {
  enum class Kind { VertexConflict, EdgeConstraint, OutOfPalette, SizeMismatch };

  Kind kind;
  Vertex vertex = 0;
  EdgeIndex edge = 0;
  EdgeIndex other_edge = 0;
  Color color = 0;

  std::string describe() const;
};

struct ProperReport {
  bool proper = true;
  std::vector<Violation> violations;
};

/// Reports every violation: palette membership, the edge constraint
/// gamma(v,e) = -sigma(e) gamma(w,e), and repeated colors at a vertex.
ProperReport check_proper(const SignedGraph& g, const IncidenceColoring& coloring);
bool is_proper(const SignedGraph& g, const IncidenceColoring& coloring);

struct CGraphComponent {
  enum class Kind { Path, Cycle };

  Kind kind;
  /// Walk order. For a cycle the closing edge returns to vertices.front().
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;
  /// Product of edge signs; meaningful for cycles.
  Sign sign = Sign::Positive;
};

/// The subgraph of edges colored ±level.
struct CGraph {
  int level = 0;
  std::vector<EdgeIndex> edges;
  std::vector<CGraphComponent> components;

  bool empty() const { return edges.empty(); }
  bool is_matching() const;
  /// Every component is a path or a positive cycle.
  bool balanced() const;
};

/// Throws std::out_of_range if level > r, std::invalid_argument if some vertex
/// carries more than two incidences of the level (the coloring is improper).
CGraph c_graph(const SignedGraph& g, const IncidenceColoring& coloring, int level);

/// Number of proper colorings of a single signed path or cycle using only
/// ±level, by exhaustive enumeration. Throws std::invalid_argument if the
/// segment is not a path or a cycle.
std::size_t count_pm_a_colorings(const SignedGraph& segment, int level);

/// Negates the color of every incidence at a vertex of x. Proper on
/// switched(g, x) whenever the input is proper on g.
IncidenceColoring transport(const SignedGraph& g, const IncidenceColoring& coloring,
                            const SwitchSet& x);

/// The fixed bijection {1..q} -> M_q: 1, -1, 2, -2, ..., with 0 last for odd q.
Color palette_bijection(int q, int classical_color);

/// Lifts a classical edge coloring (values 1..q, indexed by edge) of an
/// all-negative graph. Throws std::invalid_argument if g has a positive edge
/// or the classical coloring is not proper.
IncidenceColoring from_unsigned(const SignedGraph& g, std::span<const int> classical, int q);

bool is_proper_classical(const SignedGraph& g, std::span<const int> classical, int q);

}  // namespace sgc
