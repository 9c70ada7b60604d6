#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgc {

/// Vertex ids are dense and 1-based.
using Vertex = int;
using EdgeIndex = std::size_t;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::Positive : Sign::Negative; }

struct SignedEdge {
  Vertex u;
  Vertex v;
  Sign sign = Sign::Positive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Raised when an edge list violates the simple-graph invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A simple undirected graph with a sign on every edge. Edge identity is the
/// position in the construction list; every derived structure preserves it.
class SignedGraph {
 public:
  SignedGraph(int vertex_count, std::vector<SignedEdge> edges);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const SignedEdge> edges() const { return edges_; }
  const SignedEdge& edge(EdgeIndex e) const { return edges_.at(e); }
  Sign sign(EdgeIndex e) const { return edges_.at(e).sign; }

  /// Edge indices incident to v, in increasing order.
  std::span<const EdgeIndex> incident(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;

  Vertex other_end(EdgeIndex e, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }
  std::optional<EdgeIndex> find_edge(Vertex u, Vertex v) const;

  std::vector<Sign> signature() const;
  std::vector<EdgeIndex> negative_edges() const;

  /// Same topology, new signs (indexed by edge).
  SignedGraph with_signature(std::span<const Sign> signs) const;
  SignedGraph all_positive() const;
  SignedGraph all_negative() const;

  /// Same vertex count and same unordered edge set, signs ignored.
  bool same_underlying(const SignedGraph& other) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_;
  std::vector<SignedEdge> edges_;
  std::vector<std::vector<EdgeIndex>> adjacency_;
};

SignedGraph build_graph(int vertex_count, std::vector<SignedEdge> edges);

/// A subset X of V(G).
class SwitchSet {
 public:
  SwitchSet() = default;
  SwitchSet(std::initializer_list<Vertex> vertices);
  explicit SwitchSet(std::vector<Vertex> vertices);

  bool contains(Vertex v) const;
  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }
  /// Sorted, duplicate-free.
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// Symmetric difference; switching by a then b equals switching by a ^ b.
  SwitchSet operator^(const SwitchSet& other) const;

  friend bool operator==(const SwitchSet&, const SwitchSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Negates every edge with exactly one endpoint in x.
SignedGraph switched(const SignedGraph& g, const SwitchSet& x);

/// A cycle given as its vertex sequence (closing edge back to the front is
/// implicit) together with the edges traversed.
struct CycleWitness {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;

  Sign sign(const SignedGraph& g) const;
};

struct BalanceReport {
  bool balanced = true;
  /// potential[v] for v in 1..n (index 0 unused). Lowest vertex of every
  /// component is fixed to +1. Only meaningful when balanced.
  std::vector<Sign> potential;
  std::optional<CycleWitness> negative_cycle;
};

BalanceReport check_balance(const SignedGraph& g);
bool is_balanced(const SignedGraph& g);

/// Switch set X with switched((G, a), X) == (G, b), if any. Throws
/// std::invalid_argument when the underlying graphs differ.
std::optional<SwitchSet> switching_equivalent(const SignedGraph& a, const SignedGraph& b);

}  // namespace sgc
