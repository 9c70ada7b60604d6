#pragma once

#include <cstdint>
#include <vector>

#include "sgc/isomorphism.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

/// Signatures packed as bit masks: bit e is set iff edge e is negative.
using SignatureMask = std::uint64_t;

SignatureMask to_mask(const SignedGraph& g);
SignedGraph from_mask(const SignedGraph& topology, SignatureMask mask);

/// Generators of a group acting on signatures of a fixed graph: XOR masks
/// (switchings) and edge permutations (image[e] = where edge e goes).
struct SignatureAction {
  std::vector<SignatureMask> switch_masks;
  std::vector<std::vector<EdgeIndex>> edge_permutations;

  /// One generator per vertex switching.
  static SignatureAction switchings(const SignedGraph& topology);
  /// Adds the edge permutation induced by a vertex permutation.
  void add_vertex_permutation(const SignedGraph& topology, const VertexPermutation& p);
};

SignatureMask permute_mask(SignatureMask mask, const std::vector<EdgeIndex>& edge_image);

struct SignatureOrbit {
  /// Numerically smallest mask in the orbit.
  SignatureMask representative;
  std::uint64_t size;
  /// Fewest negative edges over the orbit.
  int min_negative_edges;
};

inline constexpr std::size_t kMaxOrbitEdges = 24;

/// Orbit decomposition of all 2^edge_count signatures by breadth-first search
/// over the generators. Orbits are returned sorted by representative.
std::vector<SignatureOrbit> signature_orbits(std::size_t edge_count, const SignatureAction& action);

}  // namespace sgc
