#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "sgc/coloring.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

// Exact backtracking search for proper q-edge colorings.
//
// Edges are visited in a fixed order (descending endpoint-degree sum, ties by
// edge index) and the color at the first endpoint is tried in palette order
// 0, 1, -1, 2, -2, ... Every level >= 1 can be renamed and sign-flipped
// without affecting properness, so by default a level that has not been used
// yet is only tried once, as +a for the smallest unused a.

struct SearchLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  bool symmetry_breaking = true;
};

enum class SearchStatus { Found, Exhausted, TimedOut };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<IncidenceColoring> coloring;
  std::uint64_t nodes = 0;
};

inline constexpr int kMaxPaletteSize = 63;

SearchOutcome search_coloring(const SignedGraph& g, int q, const SearchLimits& limits = {});

/// Proper coloring with palette M_q, if one exists.
std::optional<IncidenceColoring> exists_coloring(const SignedGraph& g, int q);

/// Visits every proper q-coloring (no symmetry reduction) in search order
/// until visit returns false. Returns the number visited.
std::uint64_t for_each_coloring(const SignedGraph& g, int q,
                                const std::function<bool(const IncidenceColoring&)>& visit);

enum class VizingClass { One, Two };

struct SolveResult {
  int chromatic_index;
  IncidenceColoring witness;
  VizingClass vizing_class;
};

/// Probes q = Δ then q = Δ + 1. Throws std::invalid_argument on an edgeless
/// graph and std::logic_error if Δ + 1 fails.
SolveResult chromatic_index(const SignedGraph& g);

/// 2 for a balanced cycle, 3 otherwise. Throws std::invalid_argument if g is
/// not a single cycle.
int signed_cycle_index(const SignedGraph& cycle);

}  // namespace sgc
