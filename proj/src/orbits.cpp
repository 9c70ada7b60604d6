#include "sgc/orbits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sgc {

SignatureMask to_mask(const SignedGraph& g) {
  if (g.edge_count() > 64) throw std::length_error("signature mask holds at most 64 edges");
  SignatureMask mask = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.sign(e) == Sign::Negative) mask |= SignatureMask{1} << e;
  }
  return mask;
}

SignedGraph from_mask(const SignedGraph& topology, SignatureMask mask) {
  std::vector<Sign> signs(topology.edge_count(), Sign::Positive);
  for (EdgeIndex e = 0; e < signs.size(); ++e) {
    if ((mask >> e) & 1U) signs[e] = Sign::Negative;
  }
  return topology.with_signature(signs);
}

SignatureAction SignatureAction::switchings(const SignedGraph& topology) {
  SignatureAction action;
  for (Vertex v = 1; v <= topology.vertex_count(); ++v) {
    SignatureMask m = 0;
    for (EdgeIndex e : topology.incident(v)) m |= SignatureMask{1} << e;
    if (m != 0) action.switch_masks.push_back(m);
  }
  return action;
}

void SignatureAction::add_vertex_permutation(const SignedGraph& topology,
                                             const VertexPermutation& p) {
  std::vector<EdgeIndex> image(topology.edge_count());
  for (EdgeIndex e = 0; e < topology.edge_count(); ++e) {
    const SignedEdge& edge = topology.edge(e);
    const auto target = topology.find_edge(p(edge.u), p(edge.v));
    if (!target) throw std::invalid_argument("vertex permutation is not an automorphism");
    image[e] = *target;
  }
  edge_permutations.push_back(std::move(image));
}

SignatureMask permute_mask(SignatureMask mask, const std::vector<EdgeIndex>& edge_image) {
  SignatureMask out = 0;
  for (EdgeIndex e = 0; e < edge_image.size(); ++e) {
    if ((mask >> e) & 1U) out |= SignatureMask{1} << edge_image[e];
  }
  return out;
}

std::vector<SignatureOrbit> signature_orbits(std::size_t edge_count, const SignatureAction& action) {
  if (edge_count > kMaxOrbitEdges) {
    throw std::length_error("orbit enumeration is limited to " + std::to_string(kMaxOrbitEdges) +
                            " edges");
  }
  const SignatureMask total = SignatureMask{1} << edge_count;
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  std::vector<SignatureOrbit> orbits;
  std::vector<SignatureMask> stack;
  // Scanning in increasing order makes the seed of each new orbit its minimum.
  for (SignatureMask seed = 0; seed < total; ++seed) {
    if (seen[static_cast<std::size_t>(seed)]) continue;
    seen[static_cast<std::size_t>(seed)] = true;
    stack.assign(1, seed);
    std::uint64_t size = 0;
    int min_weight = std::popcount(seed);
    while (!stack.empty()) {
      const SignatureMask cur = stack.back();
      stack.pop_back();
      ++size;
      min_weight = std::min(min_weight, std::popcount(cur));
      auto push = [&](SignatureMask next) {
        if (!seen[static_cast<std::size_t>(next)]) {
          seen[static_cast<std::size_t>(next)] = true;
          stack.push_back(next);
        }
      };
      for (SignatureMask m : action.switch_masks) push(cur ^ m);
      for (const auto& p : action.edge_permutations) push(permute_mask(cur, p));
    }
    orbits.push_back({seed, size, min_weight});
  }
  return orbits;
}

}  // namespace sgc
