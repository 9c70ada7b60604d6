#include "sgc/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace sgc {

VertexPermutation VertexPermutation::identity(int n) {
  VertexPermutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 1);
  return p;
}

VertexPermutation VertexPermutation::inverse() const {
  VertexPermutation inv;
  inv.image.assign(image.size(), 0);
  for (std::size_t i = 0; i < image.size(); ++i) {
    inv.image.at(static_cast<std::size_t>(image[i] - 1)) = static_cast<Vertex>(i + 1);
  }
  return inv;
}

SignedGraph relabeled(const SignedGraph& g, const VertexPermutation& p) {
  if (p.size() != g.vertex_count()) {
    throw std::invalid_argument("permutation size does not match vertex count");
  }
  std::vector<SignedEdge> edges;
  edges.reserve(g.edge_count());
  for (const SignedEdge& e : g.edges()) edges.push_back({p(e.u), p(e.v), e.sign});
  return SignedGraph(g.vertex_count(), std::move(edges));
}

namespace {

class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const SignedGraph& g)
      : n_(g.vertex_count()), bits_(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), false) {
    for (const SignedEdge& e : g.edges()) {
      bits_[index(e.u, e.v)] = true;
      bits_[index(e.v, e.u)] = true;
    }
  }
  bool operator()(Vertex a, Vertex b) const { return bits_[index(a, b)]; }

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a * (n_ + 1) + b);
  }
  int n_;
  std::vector<bool> bits_;
};

// Order so each vertex after the first of its component has an earlier
// neighbour: BFS from the highest-degree unplaced vertex.
std::vector<Vertex> search_order(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
  std::vector<Vertex> order;
  while (static_cast<int>(order.size()) < n) {
    Vertex start = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (!placed[static_cast<std::size_t>(v)] && (start == 0 || g.degree(v) > g.degree(start))) {
        start = v;
      }
    }
    placed[static_cast<std::size_t>(start)] = true;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (EdgeIndex e : g.incident(u)) {
        const Vertex w = g.other_end(e, u);
        if (!placed[static_cast<std::size_t>(w)]) {
          placed[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

}  // namespace

void for_each_isomorphism(const SignedGraph& a, const SignedGraph& b,
                          const std::function<bool(const VertexPermutation&)>& visit,
                          int vertex_limit) {
  if (a.vertex_count() > vertex_limit || b.vertex_count() > vertex_limit) {
    throw std::length_error("isomorphism search is limited to " + std::to_string(vertex_limit) +
                            " vertices; exhaustive enumeration is infeasible beyond that");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return;
  {
    std::vector<int> da, db;
    for (Vertex v = 1; v <= a.vertex_count(); ++v) {
      da.push_back(a.degree(v));
      db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return;
  }

  const int n = a.vertex_count();
  const AdjacencyMatrix adj_a(a);
  const AdjacencyMatrix adj_b(b);
  const std::vector<Vertex> order = search_order(a);
  VertexPermutation map;
  map.image.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  bool stop = false;

  auto extend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      if (!visit(map)) stop = true;
      return;
    }
    const Vertex v = order[depth];
    for (Vertex cand = 1; cand <= n && !stop; ++cand) {
      if (used[static_cast<std::size_t>(cand)] || b.degree(cand) != a.degree(v)) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const Vertex x = order[i];
        consistent = adj_a(v, x) == adj_b(cand, map(x));
      }
      if (!consistent) continue;
      map.image[static_cast<std::size_t>(v - 1)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      self(self, depth + 1);
      used[static_cast<std::size_t>(cand)] = false;
    }
  };
  extend(extend, 0);
}

std::vector<VertexPermutation> automorphisms(const SignedGraph& g, int vertex_limit) {
  std::vector<VertexPermutation> out;
  for_each_isomorphism(
      g, g,
      [&](const VertexPermutation& p) {
        out.push_back(p);
        return true;
      },
      vertex_limit);
  return out;
}

bool switching_isomorphic(const SignedGraph& a, const SignedGraph& b, int vertex_limit) {
  bool found = false;
  for_each_isomorphism(
      a, b,
      [&](const VertexPermutation& f) {
        found = switching_equivalent(relabeled(a, f), b).has_value();
        return !found;
      },
      vertex_limit);
  return found;
}

}  // namespace sgc
