#include "sgc/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sgc {

namespace {

using Mask = std::uint64_t;

class Search {
 public:
  Search(const SignedGraph& g, int q, const SearchLimits& limits)
      : g_(g), palette_(q), limits_(limits), r_(q / 2) {
    if (q > kMaxPaletteSize) {
      throw std::invalid_argument("palette size " + std::to_string(q) + " exceeds " +
                                  std::to_string(kMaxPaletteSize));
    }
    for (Color c : palette_.colors()) palette_bits_ |= bit(c);
    const auto n = static_cast<std::size_t>(g.vertex_count()) + 1;
    used_.assign(n, 0);
    mirror_.assign(n, 0);
    level_uses_.assign(static_cast<std::size_t>(r_) + 1, 0);
    colored_.assign(g.edge_count(), false);
    colors_.assign(g.edge_count(), {});
    order_.resize(g.edge_count());
    std::iota(order_.begin(), order_.end(), EdgeIndex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeIndex a, EdgeIndex b) {
      return degree_sum(a) > degree_sum(b);
    });
    candidates_ = palette_.colors();
  }

  // visit returns false to stop.
  template <typename Visit>
  SearchStatus run(Visit&& visit) {
    stopped_ = false;
    timed_out_ = false;
    descend(0, visit);
    if (timed_out_) return SearchStatus::TimedOut;
    return stopped_ ? SearchStatus::Found : SearchStatus::Exhausted;
  }

  IncidenceColoring current() const { return IncidenceColoring(palette_, colors_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Mask bit(Color c) const { return Mask{1} << static_cast<unsigned>(c + r_); }

  int degree_sum(EdgeIndex e) const { return g_.degree(g_.edge(e).u) + g_.degree(g_.edge(e).v); }

  // Colors allowed at the first endpoint of e.
  Mask allowed(EdgeIndex e) const {
    const SignedEdge& edge = g_.edge(e);
    const auto u = static_cast<std::size_t>(edge.u);
    const auto v = static_cast<std::size_t>(edge.v);
    const Mask blocked_far = edge.sign == Sign::Negative ? used_[v] : mirror_[v];
    return palette_bits_ & ~used_[u] & ~blocked_far;
  }

  void place(EdgeIndex e, Color c, int delta) {
    const SignedEdge& edge = g_.edge(e);
    const Color far = -to_int(edge.sign) * c;
    const auto u = static_cast<std::size_t>(edge.u);
    const auto v = static_cast<std::size_t>(edge.v);
    used_[u] ^= bit(c);
    mirror_[u] ^= bit(-c);
    used_[v] ^= bit(far);
    mirror_[v] ^= bit(-far);
    level_uses_[static_cast<std::size_t>(std::abs(c))] += delta;
    colored_[e] = delta > 0;
    colors_[e] = {c, far};
  }

  bool neighbours_feasible(EdgeIndex e) const {
    for (Vertex x : {g_.edge(e).u, g_.edge(e).v}) {
      for (EdgeIndex f : g_.incident(x)) {
        if (!colored_[f] && allowed(f) == 0) return false;
      }
    }
    return true;
  }

  int levels_in_use() const {
    int l = 0;
    while (l < r_ && level_uses_[static_cast<std::size_t>(l) + 1] > 0) ++l;
    return l;
  }

  template <typename Visit>
  void descend(std::size_t depth, Visit& visit) {
    if (stopped_ || timed_out_) return;
    if ((++nodes_ & 0x3FFU) == 0 && limits_.deadline &&
        std::chrono::steady_clock::now() > *limits_.deadline) {
      timed_out_ = true;
      return;
    }
    if (depth == order_.size()) {
      if (!visit(*this)) stopped_ = true;
      return;
    }
    const EdgeIndex e = order_[depth];
    const Mask ok = allowed(e);
    const int fresh_level = limits_.symmetry_breaking ? levels_in_use() + 1 : 0;
    for (Color c : candidates_) {
      if (!(ok & bit(c))) continue;
      if (limits_.symmetry_breaking && c != 0 &&
          level_uses_[static_cast<std::size_t>(std::abs(c))] == 0 && c != fresh_level) {
        continue;
      }
      place(e, c, +1);
      if (neighbours_feasible(e)) descend(depth + 1, visit);
      place(e, c, -1);
      if (stopped_ || timed_out_) return;
    }
  }

  const SignedGraph& g_;
  ColorSet palette_;
  SearchLimits limits_;
  int r_;
  Mask palette_bits_ = 0;
  std::vector<Mask> used_;
  std::vector<Mask> mirror_;
  std::vector<int> level_uses_;
  std::vector<bool> colored_;
  std::vector<EdgeColors> colors_;
  std::vector<EdgeIndex> order_;
  std::vector<Color> candidates_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  bool timed_out_ = false;
};

}  // namespace

SearchOutcome search_coloring(const SignedGraph& g, int q, const SearchLimits& limits) {
  if (q < 0) throw std::invalid_argument("palette size must be nonnegative");
  SearchOutcome outcome;
  Search search(g, q, limits);
  outcome.status = search.run([&](const Search& s) {
    outcome.coloring = s.current();
    return false;
  });
  outcome.nodes = search.nodes();
  if (outcome.status != SearchStatus::Found) outcome.coloring.reset();
  return outcome;
}

std::optional<IncidenceColoring> exists_coloring(const SignedGraph& g, int q) {
  return search_coloring(g, q).coloring;
}

std::uint64_t for_each_coloring(const SignedGraph& g, int q,
                                const std::function<bool(const IncidenceColoring&)>& visit) {
  SearchLimits limits;
  limits.symmetry_breaking = false;
  Search search(g, q, limits);
  std::uint64_t count = 0;
  search.run([&](const Search& s) {
    ++count;
    return visit(s.current());
  });
  return count;
}

SolveResult chromatic_index(const SignedGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("chromatic_index needs at least one edge");
  const int delta = g.max_degree();
  if (auto witness = exists_coloring(g, delta)) {
    return {delta, std::move(*witness), VizingClass::One};
  }
  if (auto witness = exists_coloring(g, delta + 1)) {
    return {delta + 1, std::move(*witness), VizingClass::Two};
  }
  throw std::logic_error("no proper " + std::to_string(delta + 1) +
                         "-coloring found; the Vizing bound says one exists (solver bug)");
}

int signed_cycle_index(const SignedGraph& cycle) {
  const int n = cycle.vertex_count();
  if (n < 3 || static_cast<int>(cycle.edge_count()) != n) {
    throw std::invalid_argument("signed_cycle_index needs a single cycle");
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (cycle.degree(v) != 2) throw std::invalid_argument("signed_cycle_index needs a single cycle");
  }
  // 2-regular with |E| = |V|: a single cycle iff connected.
  Vertex prev = 0;
  Vertex cur = 1;
  int steps = 0;
  do {
    Vertex next = 0;
    for (EdgeIndex e : cycle.incident(cur)) {
      const Vertex w = cycle.other_end(e, cur);
      if (w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != 1 && steps <= n);
  if (steps != n) throw std::invalid_argument("signed_cycle_index needs a single cycle");

  Sign product = Sign::Positive;
  for (const SignedEdge& e : cycle.edges()) product = product * e.sign;
  return product == Sign::Positive ? 2 : 3;
}

}  // namespace sgc
