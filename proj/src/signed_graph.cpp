#include "sgc/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace sgc {

namespace {

std::string edge_text(const SignedEdge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
         (e.sign == Sign::Positive ? "+" : "-") + ")";
}

}  // namespace

SignedGraph::SignedGraph(int vertex_count, std::vector<SignedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) {
    throw GraphError("vertex count must be positive, got " + std::to_string(vertex_count_));
  }
  adjacency_.resize(static_cast<std::size_t>(vertex_count_) + 1);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    const SignedEdge& e = edges_[i];
    const std::string where = "edge " + std::to_string(i + 1) + " " + edge_text(e);
    if (e.u < 1 || e.u > vertex_count_ || e.v < 1 || e.v > vertex_count_) {
      throw GraphError(where + ": vertex out of range 1.." + std::to_string(vertex_count_));
    }
    if (e.sign != Sign::Positive && e.sign != Sign::Negative) {
      throw GraphError(where + ": sign must be +1 or -1");
    }
    if (e.u == e.v) {
      throw GraphError(where + ": self-loop");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw GraphError(where + ": duplicate edge");
    }
    adjacency_[static_cast<std::size_t>(e.u)].push_back(i);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(i);
  }
}

SignedGraph build_graph(int vertex_count, std::vector<SignedEdge> edges) {
  return SignedGraph(vertex_count, std::move(edges));
}

std::span<const EdgeIndex> SignedGraph::incident(Vertex v) const {
  if (v < 1 || v > vertex_count_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[static_cast<std::size_t>(v)];
}

int SignedGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

Vertex SignedGraph::other_end(EdgeIndex e, Vertex v) const {
  const SignedEdge& edge = edges_.at(e);
  if (edge.u == v) return edge.v;
  if (edge.v == v) return edge.u;
  throw std::invalid_argument("vertex " + std::to_string(v) + " is not an end of edge " +
                              std::to_string(e + 1));
}

std::optional<EdgeIndex> SignedGraph::find_edge(Vertex u, Vertex v) const {
  if (u < 1 || u > vertex_count_ || v < 1 || v > vertex_count_) return std::nullopt;
  for (EdgeIndex e : adjacency_[static_cast<std::size_t>(u)]) {
    if (other_end(e, u) == v) return e;
  }
  return std::nullopt;
}

std::vector<Sign> SignedGraph::signature() const {
  std::vector<Sign> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.sign);
  return out;
}

std::vector<EdgeIndex> SignedGraph::negative_edges() const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    if (edges_[i].sign == Sign::Negative) out.push_back(i);
  }
  return out;
}

SignedGraph SignedGraph::with_signature(std::span<const Sign> signs) const {
  if (signs.size() != edges_.size()) {
    throw std::invalid_argument("signature has " + std::to_string(signs.size()) +
                                " entries, graph has " + std::to_string(edges_.size()) + " edges");
  }
  SignedGraph out = *this;
  for (EdgeIndex i = 0; i < edges_.size(); ++i) out.edges_[i].sign = signs[i];
  return out;
}

SignedGraph SignedGraph::all_positive() const {
  return with_signature(std::vector<Sign>(edges_.size(), Sign::Positive));
}

SignedGraph SignedGraph::all_negative() const {
  return with_signature(std::vector<Sign>(edges_.size(), Sign::Negative));
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (vertex_count_ != other.vertex_count_ || edges_.size() != other.edges_.size()) return false;
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const SignedEdge& e) { return other.adjacent(e.u, e.v); });
}

// ---------------------------------------------------------------------------

SwitchSet::SwitchSet(std::initializer_list<Vertex> vertices)
    : SwitchSet(std::vector<Vertex>(vertices)) {}

SwitchSet::SwitchSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool SwitchSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

SwitchSet SwitchSet::operator^(const SwitchSet& other) const {
  std::vector<Vertex> out;
  std::set_symmetric_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                                other.vertices_.end(), std::back_inserter(out));
  return SwitchSet(std::move(out));
}

SignedGraph switched(const SignedGraph& g, const SwitchSet& x) {
  for (Vertex v : x.vertices()) {
    if (v < 1 || v > g.vertex_count()) {
      throw std::out_of_range("switch vertex " + std::to_string(v) + " out of range 1.." +
                              std::to_string(g.vertex_count()));
    }
  }
  std::vector<Sign> signs = g.signature();
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const SignedEdge& e = g.edge(i);
    if (x.contains(e.u) != x.contains(e.v)) signs[i] = -signs[i];
  }
  return g.with_signature(signs);
}

Sign CycleWitness::sign(const SignedGraph& g) const {
  Sign s = Sign::Positive;
  for (EdgeIndex e : edges) s = s * g.sign(e);
  return s;
}

// ---------------------------------------------------------------------------

BalanceReport check_balance(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  BalanceReport report;
  report.potential.assign(n + 1, Sign::Positive);
  std::vector<bool> visited(n + 1, false);
  std::vector<std::optional<EdgeIndex>> parent_edge(n + 1);
  std::vector<int> depth(n + 1, 0);
  std::vector<bool> tree_edge(g.edge_count(), false);

  // Spanning forest by BFS, lowest vertex of each component as root (+1).
  for (Vertex root = 1; root <= g.vertex_count(); ++root) {
    if (visited[static_cast<std::size_t>(root)]) continue;
    visited[static_cast<std::size_t>(root)] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (EdgeIndex e : g.incident(u)) {
        const Vertex w = g.other_end(e, u);
        const auto wi = static_cast<std::size_t>(w);
        if (visited[wi]) continue;
        visited[wi] = true;
        parent_edge[wi] = e;
        tree_edge[e] = true;
        depth[wi] = depth[static_cast<std::size_t>(u)] + 1;
        report.potential[wi] = report.potential[static_cast<std::size_t>(u)] * g.sign(e);
        queue.push_back(w);
      }
    }
  }

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[e]) continue;
    const SignedEdge& edge = g.edge(e);
    const Sign expected = report.potential[static_cast<std::size_t>(edge.u)] *
                          report.potential[static_cast<std::size_t>(edge.v)];
    if (expected == edge.sign) continue;

    // Tree path u -> lca -> v closed by e.
    report.balanced = false;
    std::vector<Vertex> from_u{edge.u};
    std::vector<EdgeIndex> edges_u;
    std::vector<Vertex> from_v{edge.v};
    std::vector<EdgeIndex> edges_v;
    Vertex a = edge.u;
    Vertex b = edge.v;
    auto climb = [&](Vertex& x, std::vector<Vertex>& path, std::vector<EdgeIndex>& es) {
      const EdgeIndex pe = *parent_edge[static_cast<std::size_t>(x)];
      es.push_back(pe);
      x = g.other_end(pe, x);
      path.push_back(x);
    };
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
      climb(a, from_u, edges_u);
    }
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
      climb(b, from_v, edges_v);
    }
    while (a != b) {
      climb(a, from_u, edges_u);
      climb(b, from_v, edges_v);
    }
    CycleWitness cycle;
    cycle.vertices = from_u;  // ends at the lca
    for (auto it = from_v.rbegin() + 1; it != from_v.rend(); ++it) cycle.vertices.push_back(*it);
    cycle.edges = edges_u;
    for (auto it = edges_v.rbegin(); it != edges_v.rend(); ++it) cycle.edges.push_back(*it);
    cycle.edges.push_back(e);
    report.negative_cycle = std::move(cycle);
    break;
  }
  return report;
}

bool is_balanced(const SignedGraph& g) { return check_balance(g).balanced; }

std::optional<SwitchSet> switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!a.same_underlying(b)) {
    throw std::invalid_argument("switching_equivalent: underlying graphs differ");
  }
  std::vector<Sign> product;
  product.reserve(a.edge_count());
  for (const SignedEdge& e : a.edges()) {
    product.push_back(e.sign * b.sign(*b.find_edge(e.u, e.v)));
  }
  const BalanceReport report = check_balance(a.with_signature(product));
  if (!report.balanced) return std::nullopt;
  std::vector<Vertex> x;
  for (Vertex v = 1; v <= a.vertex_count(); ++v) {
    if (report.potential[static_cast<std::size_t>(v)] == Sign::Negative) x.push_back(v);
  }
  return SwitchSet(std::move(x));
}

}  // namespace sgc
