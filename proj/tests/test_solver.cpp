#include <doctest.h>

#include "oracles.hpp"
#include "sgc/isomorphism.hpp"
#include "sgc/solver.hpp"

using namespace sgc;

namespace {

SignedGraph complete(int n, std::uint64_t negative_mask = 0) {
  std::vector<SignedEdge> edges;
  std::size_t e = 0;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j, ++e) {
      edges.push_back({i, j, ((negative_mask >> e) & 1U) ? Sign::Negative : Sign::Positive});
    }
  }
  return SignedGraph(n, edges);
}

}  // namespace

TEST_CASE("cycles: two colors iff balanced") {
  for (int len = 3; len <= 8; ++len) {
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
      const SignedGraph c = oracle::cycle(oracle::signs_from_bits(len, bits));
      const int expected = std::popcount(bits) % 2 == 0 ? 2 : 3;
      CHECK(signed_cycle_index(c) == expected);
      CHECK(chromatic_index(c).chromatic_index == expected);
    }
  }
  CHECK_THROWS_AS(signed_cycle_index(oracle::path({1, 1, 1})), std::invalid_argument);
  const SignedGraph two_triangles(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CHECK_THROWS_AS(signed_cycle_index(two_triangles), std::invalid_argument);
}

TEST_CASE("solver agrees with a naive exhaustive search") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const SignedGraph g = oracle::random_graph(rng, n, 0.55, false);
    const SolveResult s = chromatic_index(g);
    CAPTURE(trial);
    CHECK(s.chromatic_index == oracle::signed_index(g));
    CHECK(is_proper(g, s.witness));
    CHECK(s.witness.palette().q() == s.chromatic_index);
    CHECK((s.vizing_class == VizingClass::One) == (s.chromatic_index == g.max_degree()));
  }
}

TEST_CASE("small complete graphs") {
  CHECK(chromatic_index(complete(4)).chromatic_index == 3);
  CHECK(chromatic_index(complete(4).all_negative()).chromatic_index == 3);
  CHECK(chromatic_index(complete(5)).chromatic_index == 4);
  CHECK(chromatic_index(complete(5, 1)).chromatic_index == 5);
  CHECK(chromatic_index(complete(5).all_negative()).chromatic_index == 5);
}

TEST_CASE("symmetry breaking does not change existence") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const SignedGraph g = oracle::random_graph(rng, 5, 0.6, false);
    for (int q = g.max_degree() - 1; q <= g.max_degree() + 1; ++q) {
      if (q < 0) continue;
      SearchLimits plain;
      plain.symmetry_breaking = false;
      CHECK((search_coloring(g, q).status == SearchStatus::Found) ==
            (search_coloring(g, q, plain).status == SearchStatus::Found));
    }
  }
}

TEST_CASE("enumeration visits only proper colorings and counts all of them") {
  // A single edge with M_2: (1, -1) or (-1, 1).
  CHECK(for_each_coloring(oracle::path({1}), 2, [](const IncidenceColoring&) { return true; }) == 2);
  const SignedGraph tri = oracle::cycle({1, 1, 1});
  std::uint64_t proper = 0;
  const std::uint64_t total = for_each_coloring(tri, 3, [&](const IncidenceColoring& c) {
    proper += is_proper(tri, c) ? 1 : 0;
    return true;
  });
  CHECK(total == proper);
  CHECK(total > 0);
  // Cross-check against brute force over first-endpoint colors.
  std::uint64_t brute = 0;
  const auto pal = oracle::palette(3);
  for (int a : pal)
    for (int b : pal)
      for (int c : pal) {
        IncidenceColoring col(ColorSet(3), {{a, -a}, {b, -b}, {c, -c}});
        brute += is_proper(tri, col) ? 1 : 0;
      }
  CHECK(total == brute);
  CHECK(for_each_coloring(tri, 3, [](const IncidenceColoring&) { return false; }) == 1);
}

TEST_CASE("chromatic index is invariant under switching and relabeling") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const SignedGraph g = oracle::random_graph(rng, n, 0.5, false);
    std::vector<Vertex> xs, image(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
      if (rng() & 1U) xs.push_back(v);
    }
    std::iota(image.begin(), image.end(), 1);
    std::shuffle(image.begin(), image.end(), rng);
    const int base = chromatic_index(g).chromatic_index;
    CHECK(chromatic_index(switched(g, SwitchSet(xs))).chromatic_index == base);
    CHECK(chromatic_index(relabeled(g, VertexPermutation{image})).chromatic_index == base);
  }
}

TEST_CASE("all-negative graphs follow the classical index") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const SignedGraph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 4), 0.6, true).all_negative();
    CHECK(chromatic_index(g).chromatic_index == oracle::classical_index(g));
  }
}

TEST_CASE("deadline stops the search") {
  SearchLimits limits;
  limits.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  // All-negative K_7 at q = 6 is infeasible and takes far more than 1024 nodes.
  const SearchOutcome out = search_coloring(complete(7).all_negative(), 6, limits);
  CHECK(out.status == SearchStatus::TimedOut);
  CHECK_FALSE(out.coloring.has_value());
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(chromatic_index(SignedGraph(3, {})), std::invalid_argument);
  CHECK_THROWS_AS(search_coloring(oracle::path({1}), 64), std::invalid_argument);
  CHECK(search_coloring(oracle::path({1}), 0).status == SearchStatus::Exhausted);
}
