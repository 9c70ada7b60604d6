#include "sgc/coloring.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace sgc {

ColorSet::ColorSet(int q) : q_(q) {
  if (q < 0) throw std::invalid_argument("palette size must be nonnegative");
}

ColorSet color_set(int q) { return ColorSet(q); }

bool ColorSet::contains(Color c) const {
  if (c == 0) return includes_zero();
  return std::abs(c) <= r();
}

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  out.reserve(static_cast<std::size_t>(q_));
  if (includes_zero()) out.push_back(0);
  for (int a = 1; a <= r(); ++a) {
    out.push_back(a);
    out.push_back(-a);
  }
  return out;
}

EdgeColors edge_assignment(Sign sign, Color c, const ColorSet& palette) {
  if (!palette.contains(c)) {
    throw std::out_of_range("color " + std::to_string(c) + " is not in M_" +
                            std::to_string(palette.q()));
  }
  return {c, -to_int(sign) * c};
}

// ---------------------------------------------------------------------------

IncidenceColoring::IncidenceColoring(ColorSet palette, std::vector<EdgeColors> colors)
    : palette_(palette), colors_(std::move(colors)) {}

IncidenceColoring::IncidenceColoring(ColorSet palette, std::size_t edge_count)
    : palette_(palette), colors_(edge_count) {}

Color IncidenceColoring::at(Incidence i) const {
  const EdgeColors& c = colors_.at(i.edge);
  return i.endpoint == Endpoint::First ? c.first : c.second;
}

Color IncidenceColoring::at(const SignedGraph& g, Vertex v, EdgeIndex e) const {
  const SignedEdge& edge = g.edge(e);
  if (edge.u == v) return colors_.at(e).first;
  if (edge.v == v) return colors_.at(e).second;
  throw std::invalid_argument("vertex is not an end of the edge");
}

int IncidenceColoring::max_level() const {
  int best = 0;
  for (const EdgeColors& c : colors_) {
    best = std::max({best, std::abs(c.first), std::abs(c.second)});
  }
  return best;
}

std::string Violation::describe() const {
  const std::string e1 = std::to_string(edge + 1);
  switch (kind) {
    case Kind::VertexConflict:
      return "vertex " + std::to_string(vertex) + ": edges " + e1 + " and " +
             std::to_string(other_edge + 1) + " share color " + std::to_string(color);
    case Kind::EdgeConstraint:
      return "edge " + e1 + ": colors violate gamma(v,e) = -sigma(e) gamma(w,e)";
    case Kind::OutOfPalette:
      return "edge " + e1 + " at vertex " + std::to_string(vertex) + ": color " +
             std::to_string(color) + " not in palette";
    case Kind::SizeMismatch:
      return "coloring covers " + std::to_string(edge) + " edges, graph has " +
             std::to_string(other_edge);
  }
  return {};
}

ProperReport check_proper(const SignedGraph& g, const IncidenceColoring& coloring) {
  ProperReport report;
  auto fail = [&](Violation v) {
    report.proper = false;
    report.violations.push_back(v);
  };
  if (coloring.edge_count() != g.edge_count()) {
    fail({Violation::Kind::SizeMismatch, 0, coloring.edge_count(), g.edge_count(), 0});
    return report;
  }
  const ColorSet& palette = coloring.palette();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const SignedEdge& edge = g.edge(e);
    const EdgeColors& c = coloring.at(e);
    if (!palette.contains(c.first)) fail({Violation::Kind::OutOfPalette, edge.u, e, 0, c.first});
    if (!palette.contains(c.second)) fail({Violation::Kind::OutOfPalette, edge.v, e, 0, c.second});
    if (c.first != -to_int(edge.sign) * c.second) fail({Violation::Kind::EdgeConstraint, 0, e, 0, 0});
  }
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const Color ci = coloring.at(g, v, inc[i]);
        if (ci == coloring.at(g, v, inc[j])) {
          fail({Violation::Kind::VertexConflict, v, inc[i], inc[j], ci});
        }
      }
    }
  }
  return report;
}

bool is_proper(const SignedGraph& g, const IncidenceColoring& coloring) {
  return check_proper(g, coloring).proper;
}

// ---------------------------------------------------------------------------

bool CGraph::is_matching() const {
  for (const auto& c : components) {
    if (c.edges.size() != 1) return false;
  }
  return true;
}

bool CGraph::balanced() const {
  for (const auto& c : components) {
    if (c.kind == CGraphComponent::Kind::Cycle && c.sign == Sign::Negative) return false;
  }
  return true;
}

namespace {

// Decomposes a subgraph of maximum degree 2 into paths and cycles.
std::vector<CGraphComponent> decompose(const SignedGraph& g, const std::vector<bool>& in_subgraph) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<EdgeIndex>> local(n + 1);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!in_subgraph[e]) continue;
    local[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    local[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  }
  std::vector<bool> used(g.edge_count(), false);
  std::vector<CGraphComponent> out;

  auto walk = [&](Vertex start, CGraphComponent::Kind kind) {
    CGraphComponent comp{kind, {start}, {}, Sign::Positive};
    Vertex cur = start;
    for (;;) {
      std::optional<EdgeIndex> next;
      for (EdgeIndex e : local[static_cast<std::size_t>(cur)]) {
        if (!used[e]) {
          next = e;
          break;
        }
      }
      if (!next) break;
      used[*next] = true;
      comp.edges.push_back(*next);
      comp.sign = comp.sign * g.sign(*next);
      cur = g.other_end(*next, cur);
      if (cur == start) break;
      comp.vertices.push_back(cur);
    }
    out.push_back(std::move(comp));
  };

  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto& l = local[static_cast<std::size_t>(v)];
    if (l.size() == 1 && !used[l.front()]) walk(v, CGraphComponent::Kind::Path);
  }
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto& l = local[static_cast<std::size_t>(v)];
    if (!l.empty() && !used[l.front()]) walk(v, CGraphComponent::Kind::Cycle);
  }
  return out;
}

}  // namespace

CGraph c_graph(const SignedGraph& g, const IncidenceColoring& coloring, int level) {
  if (level < 0 || level > coloring.palette().r()) {
    throw std::out_of_range("c-graph level " + std::to_string(level) + " outside 0.." +
                            std::to_string(coloring.palette().r()));
  }
  if (coloring.edge_count() != g.edge_count()) {
    throw std::invalid_argument("coloring does not match graph");
  }
  CGraph out;
  out.level = level;
  std::vector<bool> in(g.edge_count(), false);
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (std::abs(coloring.at(e).first) != level) continue;
    in[e] = true;
    out.edges.push_back(e);
    for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
      if (++deg[static_cast<std::size_t>(v)] > (level == 0 ? 1 : 2)) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " has too many incidences at level " +
                                    std::to_string(level) + "; coloring is not proper");
      }
    }
  }
  out.components = decompose(g, in);
  return out;
}

std::size_t count_pm_a_colorings(const SignedGraph& segment, int level) {
  if (level < 1) throw std::invalid_argument("level must be at least 1");
  const std::size_t m = segment.edge_count();
  if (m == 0 || m > 30) throw std::invalid_argument("segment must have 1..30 edges");

  for (Vertex v = 1; v <= segment.vertex_count(); ++v) {
    if (segment.degree(v) > 2) throw std::invalid_argument("segment has a vertex of degree > 2");
  }
  if (decompose(segment, std::vector<bool>(m, true)).size() != 1) {
    throw std::invalid_argument("segment must be a single path or cycle");
  }

  // Vertices of degree two are the only places two incidences can clash.
  struct Meeting {
    EdgeIndex a, b;
    bool a_first, b_first;
  };
  std::vector<Meeting> meetings;
  for (Vertex v = 1; v <= segment.vertex_count(); ++v) {
    const auto inc = segment.incident(v);
    if (inc.size() == 2) {
      meetings.push_back({inc[0], inc[1], segment.edge(inc[0]).u == v, segment.edge(inc[1]).u == v});
    }
  }
  auto color_at = [&](std::uint64_t bits, EdgeIndex e, bool first) {
    const Color c = ((bits >> e) & 1U) ? -level : level;
    return first ? c : -to_int(segment.sign(e)) * c;
  };

  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    bool proper = true;
    for (const Meeting& mt : meetings) {
      if (color_at(bits, mt.a, mt.a_first) == color_at(bits, mt.b, mt.b_first)) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
  }
  return count;
}

IncidenceColoring transport(const SignedGraph& g, const IncidenceColoring& coloring,
                            const SwitchSet& x) {
  if (coloring.edge_count() != g.edge_count()) {
    throw std::invalid_argument("coloring does not match graph");
  }
  IncidenceColoring out = coloring;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    EdgeColors c = coloring.at(e);
    if (x.contains(g.edge(e).u)) c.first = -c.first;
    if (x.contains(g.edge(e).v)) c.second = -c.second;
    out.set(e, c);
  }
  return out;
}

Color palette_bijection(int q, int classical_color) {
  if (classical_color < 1 || classical_color > q) {
    throw std::out_of_range("classical color " + std::to_string(classical_color) + " outside 1.." +
                            std::to_string(q));
  }
  if (q % 2 == 1 && classical_color == q) return 0;
  return classical_color % 2 == 1 ? (classical_color + 1) / 2 : -(classical_color / 2);
}

bool is_proper_classical(const SignedGraph& g, std::span<const int> classical, int q) {
  if (classical.size() != g.edge_count()) return false;
  for (int c : classical) {
    if (c < 1 || c > q) return false;
  }
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (classical[inc[i]] == classical[inc[j]]) return false;
      }
    }
  }
  return true;
}

IncidenceColoring from_unsigned(const SignedGraph& g, std::span<const int> classical, int q) {
  for (const SignedEdge& e : g.edges()) {
    if (e.sign != Sign::Negative) throw std::invalid_argument("from_unsigned needs an all-negative graph");
  }
  if (!is_proper_classical(g, classical, q)) {
    throw std::invalid_argument("classical coloring is not a proper " + std::to_string(q) +
                                "-edge coloring");
  }
  IncidenceColoring out(ColorSet(q), g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Color c = palette_bijection(q, classical[e]);
    out.set(e, {c, c});
  }
  return out;
}

}  // namespace sgc
