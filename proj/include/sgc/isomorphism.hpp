#pragma once

#include <functional>
#include <vector>

#include "sgc/signed_graph.hpp"

namespace sgc {

/// Bijection on 1..n, stored as image[v - 1].
struct VertexPermutation {
  std::vector<Vertex> image;

  static VertexPermutation identity(int n);

  Vertex operator()(Vertex v) const { return image.at(static_cast<std::size_t>(v - 1)); }
  int size() const { return static_cast<int>(image.size()); }
  VertexPermutation inverse() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
};

/// Renames every vertex v to p(v); edge order and signs are kept.
SignedGraph relabeled(const SignedGraph& g, const VertexPermutation& p);

inline constexpr int kDefaultAutomorphismLimit = 16;

/// Calls visit(f) for every bijection f: V(a) -> V(b) that maps the edge set
/// of a onto the edge set of b (signs ignored). Stops early when visit returns
/// false. Throws std::length_error if either graph exceeds vertex_limit.
void for_each_isomorphism(const SignedGraph& a, const SignedGraph& b,
                          const std::function<bool(const VertexPermutation&)>& visit,
                          int vertex_limit = kDefaultAutomorphismLimit);

std::vector<VertexPermutation> automorphisms(const SignedGraph& g,
                                             int vertex_limit = kDefaultAutomorphismLimit);

/// True iff some isomorphism of the underlying graphs carries a onto a
/// switching of b. Non-isomorphic underlying graphs give false.
bool switching_isomorphic(const SignedGraph& a, const SignedGraph& b,
                          int vertex_limit = kDefaultAutomorphismLimit);

}  // namespace sgc
