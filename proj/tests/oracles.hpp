#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "sgc/signed_graph.hpp"

namespace oracle {

using sgc::Sign;
using sgc::SignedEdge;
using sgc::SignedGraph;
using sgc::Vertex;

inline Sign sign_of(int s) { return s < 0 ? Sign::Negative : Sign::Positive; }

// Cycle 1-2-...-n-1 with the given signs (+1 / -1), edge i joins i and i+1.
inline SignedGraph cycle(const std::vector<int>& signs) {
  const int n = static_cast<int>(signs.size());
  std::vector<SignedEdge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1, sign_of(signs[static_cast<std::size_t>(i - 1)])});
  return SignedGraph(n, edges);
}

inline SignedGraph path(const std::vector<int>& signs) {
  const int m = static_cast<int>(signs.size());
  std::vector<SignedEdge> edges;
  for (int i = 1; i <= m; ++i) edges.push_back({i, i + 1, sign_of(signs[static_cast<std::size_t>(i - 1)])});
  return SignedGraph(m + 1, edges);
}

inline std::vector<int> signs_from_bits(int length, std::uint32_t bits) {
  std::vector<int> s;
  for (int i = 0; i < length; ++i) s.push_back(((bits >> i) & 1U) ? -1 : 1);
  return s;
}

inline bool connected(int n, const std::vector<SignedEdge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const SignedEdge& e : edges) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  for (int v = 2; v <= n; ++v) {
    if (find(v) != find(1)) return false;
  }
  return true;
}

// Random simple graph with random signs; retried until connected if asked.
inline SignedGraph random_graph(std::mt19937_64& rng, int n, double density, bool need_connected) {
  std::bernoulli_distribution keep(density), neg(0.5);
  for (;;) {
    std::vector<SignedEdge> edges;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (keep(rng)) edges.push_back({u, v, neg(rng) ? Sign::Negative : Sign::Positive});
      }
    }
    if (edges.empty()) continue;
    if (need_connected && !connected(n, edges)) continue;
    return SignedGraph(n, edges);
  }
}

// Balanced iff some switching makes every edge positive; tries all 2^n sets.
inline bool balanced_by_switching(const SignedGraph& g) {
  const int n = g.vertex_count();
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    bool all_positive = true;
    for (const SignedEdge& e : g.edges()) {
      const bool flip = (((x >> (e.u - 1)) ^ (x >> (e.v - 1))) & 1U) != 0;
      const bool negative = (e.sign == Sign::Negative) != flip;
      if (negative) {
        all_positive = false;
        break;
      }
    }
    if (all_positive) return true;
  }
  return false;
}

// Plain backtracking over edges in index order with colors 1..k.
inline bool classical_colorable(const SignedGraph& g, int k) {
  const std::size_t m = g.edge_count();
  std::vector<int> color(m, 0);
  auto clash = [&](std::size_t e, int c) {
    for (std::size_t f = 0; f < e; ++f) {
      const auto& a = g.edge(e);
      const auto& b = g.edge(f);
      const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if (share && color[f] == c) return true;
    }
    return false;
  };
  auto go = [&](auto&& self, std::size_t e) -> bool {
    if (e == m) return true;
    for (int c = 1; c <= k; ++c) {
      if (clash(e, c)) continue;
      color[e] = c;
      if (self(self, e + 1)) return true;
    }
    color[e] = 0;
    return false;
  };
  return go(go, 0);
}

inline int classical_index(const SignedGraph& g) {
  int k = 1;
  while (!classical_colorable(g, k)) ++k;
  return k;
}

// Palette M_q listed directly.
inline std::vector<int> palette(int q) {
  std::vector<int> p;
  if (q % 2 == 1) p.push_back(0);
  for (int a = 1; a <= q / 2; ++a) {
    p.push_back(a);
    p.push_back(-a);
  }
  return p;
}

// Does a proper signed q-coloring exist? Chooses the first-endpoint color of
// each edge in index order; the second is forced. Rejects on vertex clashes.
inline bool signed_colorable(const SignedGraph& g, int q) {
  const std::vector<int> pal = palette(q);
  const std::size_t m = g.edge_count();
  std::vector<std::vector<int>> at(static_cast<std::size_t>(g.vertex_count()) + 1);
  auto go = [&](auto&& self, std::size_t e) -> bool {
    if (e == m) return true;
    const SignedEdge& edge = g.edge(e);
    for (int c : pal) {
      const int d = edge.sign == Sign::Negative ? c : -c;
      auto& U = at[static_cast<std::size_t>(edge.u)];
      auto& V = at[static_cast<std::size_t>(edge.v)];
      if (std::find(U.begin(), U.end(), c) != U.end()) continue;
      if (std::find(V.begin(), V.end(), d) != V.end()) continue;
      U.push_back(c);
      V.push_back(d);
      if (self(self, e + 1)) return true;
      U.pop_back();
      V.pop_back();
    }
    return false;
  };
  return go(go, 0);
}

inline int signed_index(const SignedGraph& g) {
  int q = 1;
  while (!signed_colorable(g, q)) ++q;
  return q;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
