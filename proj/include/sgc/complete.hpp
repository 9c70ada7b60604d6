#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgc/coloring.hpp"
#include "sgc/orbits.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

/// K_n with edges (1,2), (1,3), ..., (n-1,n), all positive.
SignedGraph build_complete(int n);

struct InvariantProfile {
  int min_negative_edges = 0;
  int negative_triangles = 0;
  std::optional<int> negative_pentagons;  // n >= 5 only

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const SignedGraph& signed_complete, int min_negative_edges);

int count_negative_cycles(const SignedGraph& g, int length);

struct SwitchClass {
  SignedGraph representative;
  SignatureMask mask;
  std::uint64_t orbit_size;
  InvariantProfile profile;
  int chromatic_index;
  IncidenceColoring witness;
};

inline constexpr int kMinCompleteOrder = 3;
inline constexpr int kMaxCompleteOrder = 7;

/// Switching-isomorphism classes of signed K_n, sorted by representative mask
/// (bit e set iff edge e negative, so the all-positive class comes first).
/// Orbits come from BFS with single-vertex switchings and adjacent
/// transpositions as generators. Throws std::out_of_range outside [3, 7].
std::vector<SwitchClass> enumerate_switch_classes(int n);

/// Sorted chromatic indices of the classes.
std::vector<int> class_index_table(std::span<const SwitchClass> classes);

/// For a proper 4-coloring of a signed K_5: true iff the ±1 and ±2 subgraphs
/// are each one positive Hamiltonian cycle. Throws std::invalid_argument if
/// the graph is not K_5, the palette is not M_4, or the coloring is improper.
bool k5_decomposition_check(const SignedGraph& g, const IncidenceColoring& coloring);

enum class ProbeOutcome { Solved, Class2Confirmed, Unknown };

struct ProbeSample {
  SignatureMask signature;
  ProbeOutcome outcome;
};

struct ProbeReport {
  int n = 0;
  std::vector<ProbeSample> samples;

  int count(ProbeOutcome o) const;
};

/// Random signatures of K_n (n even) tried at q = n - 1 within a per-sample
/// time budget. The first sample is always the all-positive signature. A
/// sample is only reported as class 2 if q = n - 1 was exhausted and q = n
/// then succeeded.
ProbeReport probe_conjecture(int n, int sample_count, std::chrono::duration<double> budget,
                             std::uint64_t seed);

}  // namespace sgc
