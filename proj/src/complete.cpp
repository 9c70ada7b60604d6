#include "sgc/complete.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "sgc/solver.hpp"

namespace sgc {

SignedGraph build_complete(int n) {
  if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
  std::vector<SignedEdge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) edges.push_back({i, j, Sign::Positive});
  }
  return SignedGraph(n, std::move(edges));
}

int count_negative_cycles(const SignedGraph& g, int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  // Each cycle is found twice from its smallest vertex, once per direction.
  int twice = 0;
  std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  for (Vertex start = 1; start <= g.vertex_count(); ++start) {
    std::function<void(Vertex, int, Sign)> extend = [&](Vertex cur, int depth, Sign sign) {
      for (EdgeIndex e : g.incident(cur)) {
        const Vertex w = g.other_end(e, cur);
        const Sign s = sign * g.sign(e);
        if (w == start && depth == length) {
          if (s == Sign::Negative) ++twice;
          continue;
        }
        if (w <= start || on_path[static_cast<std::size_t>(w)] || depth == length) continue;
        on_path[static_cast<std::size_t>(w)] = true;
        extend(w, depth + 1, s);
        on_path[static_cast<std::size_t>(w)] = false;
      }
    };
    on_path[static_cast<std::size_t>(start)] = true;
    extend(start, 1, Sign::Positive);
    on_path[static_cast<std::size_t>(start)] = false;
  }
  return twice / 2;
}

InvariantProfile invariant_profile(const SignedGraph& signed_complete, int min_negative_edges) {
  InvariantProfile p;
  p.min_negative_edges = min_negative_edges;
  p.negative_triangles = count_negative_cycles(signed_complete, 3);
  if (signed_complete.vertex_count() >= 5) {
    p.negative_pentagons = count_negative_cycles(signed_complete, 5);
  }
  return p;
}

std::vector<SwitchClass> enumerate_switch_classes(int n) {
  if (n < kMinCompleteOrder || n > kMaxCompleteOrder) {
    throw std::out_of_range("switch classes of K_n are enumerated for 3 <= n <= 7, got " +
                            std::to_string(n));
  }
  const SignedGraph topology = build_complete(n);
  SignatureAction action = SignatureAction::switchings(topology);
  for (Vertex v = 1; v < n; ++v) {
    VertexPermutation swap = VertexPermutation::identity(n);
    std::swap(swap.image[static_cast<std::size_t>(v - 1)], swap.image[static_cast<std::size_t>(v)]);
    action.add_vertex_permutation(topology, swap);
  }

  std::vector<SwitchClass> classes;
  for (const SignatureOrbit& orbit : signature_orbits(topology.edge_count(), action)) {
    SignedGraph rep = from_mask(topology, orbit.representative);
    SolveResult solved = chromatic_index(rep);
    InvariantProfile profile = invariant_profile(rep, orbit.min_negative_edges);
    classes.push_back({std::move(rep), orbit.representative, orbit.size, profile,
                       solved.chromatic_index, std::move(solved.witness)});
  }
  return classes;
}

std::vector<int> class_index_table(std::span<const SwitchClass> classes) {
  std::vector<int> out;
  for (const SwitchClass& c : classes) out.push_back(c.chromatic_index);
  std::sort(out.begin(), out.end());
  return out;
}

bool k5_decomposition_check(const SignedGraph& g, const IncidenceColoring& coloring) {
  if (g.vertex_count() != 5 || g.edge_count() != 10) {
    throw std::invalid_argument("k5_decomposition_check needs K_5");
  }
  if (coloring.palette().q() != 4) {
    throw std::invalid_argument("k5_decomposition_check needs a coloring over M_4");
  }
  if (!is_proper(g, coloring)) {
    throw std::invalid_argument("k5_decomposition_check needs a proper coloring");
  }
  for (int level : {1, 2}) {
    const CGraph cg = c_graph(g, coloring, level);
    if (cg.components.size() != 1) return false;
    const CGraphComponent& c = cg.components.front();
    if (c.kind != CGraphComponent::Kind::Cycle || c.edges.size() != 5 || c.sign != Sign::Positive) {
      return false;
    }
  }
  return true;
}

int ProbeReport::count(ProbeOutcome o) const {
  return static_cast<int>(
      std::count_if(samples.begin(), samples.end(), [&](const ProbeSample& s) { return s.outcome == o; }));
}

ProbeReport probe_conjecture(int n, int sample_count, std::chrono::duration<double> budget,
                             std::uint64_t seed) {
  if (n < 4 || n % 2 != 0 || n > 10) {
    throw std::out_of_range("probe needs an even n in [4, 10], got " + std::to_string(n));
  }
  ProbeReport report;
  report.n = n;
  const SignedGraph topology = build_complete(n);
  const std::size_t edges = topology.edge_count();
  std::mt19937_64 rng(seed);
  const auto step = std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);

  for (int i = 0; i < sample_count; ++i) {
    SignatureMask mask = 0;
    if (i > 0) mask = rng() & ((SignatureMask{1} << edges) - 1);
    const SignedGraph g = from_mask(topology, mask);

    SearchLimits limits;
    limits.deadline = std::chrono::steady_clock::now() + step;
    const SearchOutcome first = search_coloring(g, n - 1, limits);
    ProbeOutcome outcome = ProbeOutcome::Unknown;
    if (first.status == SearchStatus::Found) {
      outcome = ProbeOutcome::Solved;
    } else if (first.status == SearchStatus::Exhausted) {
      limits.deadline = std::chrono::steady_clock::now() + step;
      if (search_coloring(g, n, limits).status == SearchStatus::Found) {
        outcome = ProbeOutcome::Class2Confirmed;
      }
    }
    report.samples.push_back({mask, outcome});
  }
  return report;
}

}  // namespace sgc
