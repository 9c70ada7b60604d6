// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sgc/book.hpp"
#include "sgc/complete.hpp"
#include "sgc/isomorphism.hpp"
#include "sgc/solver.hpp"

using namespace sgc;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= limit_seconds) {
    out.pass = false;
    out.detail += "; over time limit";
  }
  if (!out.pass) ++failures;
  std::printf("criterion %2d %s: %s (%.2f s of %.0f s) %s\n", id, out.pass ? "PASS" : "FAIL", title, secs,
              limit_seconds, out.detail.c_str());
  std::fflush(stdout);
}

template <typename F>
void for_each_grid_point(F&& f) {
  for (int m = 3; m <= 7; ++m)
    for (int k = 2; k <= m - 1; ++k)
      for (int n = 2; n <= 5; ++n)
        for (int l = 0; l <= n; ++l) f(m, n, k, l);
}

std::string book_name(const Book& b) {
  return "B(" + std::to_string(b.m()) + "," + std::to_string(b.n()) + "," + std::to_string(b.k()) + ")";
}

Outcome signed_cycles() {
  int checked = 0;
  for (int len = 3; len <= 8; ++len) {
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
      const SignedGraph c = oracle::cycle(oracle::signs_from_bits(len, bits));
      const int expected = std::popcount(bits) % 2 == 0 ? 2 : 3;
      if (chromatic_index(c).chromatic_index != expected || signed_cycle_index(c) != expected) {
        return {false, "length " + std::to_string(len) + " signature " + std::to_string(bits)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " signed cycles"};
}

Outcome class_counts() {
  const std::map<int, std::size_t> expected{{3, 2}, {4, 3}, {5, 7}, {6, 16}};
  std::ostringstream detail;
  bool pass = true;
  for (auto [n, count] : expected) {
    const auto t0 = Clock::now();
    const auto classes = enumerate_switch_classes(n);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::uint64_t total = 0;
    for (const SwitchClass& c : classes) total += c.orbit_size;
    const bool ok = classes.size() == count && total == (std::uint64_t{1} << oracle::binomial(n, 2));
    pass = pass && ok && (n != 6 || secs < 60.0);
    detail << "K" << n << "=" << classes.size() << " ";
  }
  return {pass, detail.str()};
}

Outcome complete_tables() {
  const std::map<int, std::multiset<int>> expected{
      {3, {2, 3}},
      {4, {3, 3, 3}},
      {5, {4, 4, 4, 5, 5, 5, 5}},
      {6, {5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5}},
  };
  std::ostringstream detail;
  bool pass = true;
  for (const auto& [n, want] : expected) {
    const auto classes = enumerate_switch_classes(n);
    const auto table = class_index_table(classes);
    const std::multiset<int> got(table.begin(), table.end());
    pass = pass && got == want;
    for (const SwitchClass& c : classes) pass = pass && is_proper(c.representative, c.witness);
    if (n == 5) {
      for (const SwitchClass& c : classes) {
        if (c.mask == 0) pass = pass && c.chromatic_index == 4;
        if (c.profile.min_negative_edges == 1) pass = pass && c.chromatic_index == 5;
      }
    }
    detail << "K" << n << "{";
    bool first = true;
    for (int x : got) {
      detail << (first ? "" : ",") << x;
      first = false;
    }
    detail << "} ";
  }
  return {pass, detail.str()};
}

Outcome k5_structure() {
  constexpr std::uint64_t kPerClass = 200;
  std::set<std::vector<int>> distinct;
  bool pass = true;
  int classes = 0;
  for (const SwitchClass& c : enumerate_switch_classes(5)) {
    if (c.chromatic_index != 4) continue;
    ++classes;
    std::uint64_t seen = 0;
    for_each_coloring(c.representative, 4, [&](const IncidenceColoring& col) {
      pass = pass && k5_decomposition_check(c.representative, col);
      std::vector<int> key{static_cast<int>(c.mask)};
      for (const EdgeColors& e : col.colors()) {
        key.push_back(e.first);
        key.push_back(e.second);
      }
      distinct.insert(key);
      return ++seen < kPerClass;
    });
  }
  pass = pass && classes == 3 && distinct.size() >= 20;
  return {pass, std::to_string(distinct.size()) + " witnesses over " + std::to_string(classes) + " classes"};
}

Outcome book_constructions() {
  int points = 0;
  int discrepancies = 0;
  std::string first_problem;
  bool pass = true;
  for_each_grid_point([&](int m, int n, int k, int l) {
    const Book b(m, n, k);
    const BookColoring c = color_book(b, l);
    ++points;
    bool ok = c.graph == b.canonical_signature(l) && c.coloring.palette().q() == n + 1 && is_proper(c.graph, c.coloring);
    for (int a = 0; ok && a <= c.coloring.palette().r(); ++a) {
      const CGraph cg = c_graph(c.graph, c.coloring, a);
      ok = a == 0 ? cg.is_matching() : cg.balanced();
    }
    if (c.discrepancy) {
      ++discrepancies;
      if (first_problem.empty()) first_problem = book_name(b) + " l=" + std::to_string(l) + " " + c.construction;
    }
    pass = pass && ok;
  });
  pass = pass && discrepancies == 0;
  std::string detail = std::to_string(points) + " grid points, " + std::to_string(discrepancies) + " discrepancies";
  if (!first_problem.empty()) detail += "; first: " + first_problem;
  return {pass, detail};
}

Outcome book_exactness() {
  int solved = 0;
  bool pass = true;
  std::string bad;
  for_each_grid_point([&](int m, int n, int k, int l) {
    const Book b(m, n, k);
    if (b.graph().edge_count() > 13) return;
    const int chi = chromatic_index(b.canonical_signature(l)).chromatic_index;
    ++solved;
    if (chi != n + 1) {
      pass = false;
      if (bad.empty()) bad = "; " + book_name(b) + " l=" + std::to_string(l) + " gave " + std::to_string(chi);
    }
  });
  return {pass, std::to_string(solved) + " signed books solved" + bad};
}

Outcome normalization() {
  std::mt19937_64 rng(2024);
  int instances = 0, generic = 0;
  std::string theta;
  bool pass = true;
  for (int m = 3; m <= 7; ++m)
    for (int k = 2; k < m; ++k)
      for (int n = 2; n <= 5; ++n) {
        const Book b(m, n, k);
        if (b.graph().edge_count() > 12) continue;
        ++instances;
        for (int trial = 0; trial < 1000; ++trial) {
          std::vector<Sign> signs;
          for (EdgeIndex e = 0; e < b.graph().edge_count(); ++e) {
            signs.push_back((rng() & 1U) ? Sign::Negative : Sign::Positive);
          }
          const SignedGraph g = b.graph().with_signature(signs);
          const BookNormalization norm = normalize(b, g);
          pass = pass && apply_normalization(b, g, norm) == b.canonical_signature(norm.l);
        }
        const int classes = class_count(b, true).classes;
        if (b.spine_is_page()) {
          // Spine and pages interchangeable: sigma_l ~ sigma_{n+1-l}.
          pass = pass && classes == (n + 1) / 2 + 1;
          theta += " " + book_name(b) + "=" + std::to_string(classes);
        } else {
          pass = pass && classes == n + 1;
          ++generic;
        }
      }
  return {pass, std::to_string(instances) + " instances x 1000 signatures; n+1 classes on " + std::to_string(generic) +
                    " instances; m=2k-2 instances give floor((n+1)/2)+1, not n+1:" + theta};
}

Outcome switching_invariance() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> order(3, 10);
  std::uniform_real_distribution<double> density(0.2, 0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = order(rng);
    const SignedGraph g = oracle::random_graph(rng, n, density(rng), false);
    std::vector<Vertex> xs;
    for (Vertex v = 1; v <= n; ++v) {
      if (rng() & 1U) xs.push_back(v);
    }
    const SwitchSet x(xs);
    const SignedGraph h = switched(g, x);
    const SolveResult a = chromatic_index(g);
    const SolveResult b = chromatic_index(h);
    if (a.chromatic_index != b.chromatic_index || !is_proper(h, transport(g, a.witness, x)) ||
        !is_proper(g, transport(h, b.witness, x))) {
      return {false, "trial " + std::to_string(trial)};
    }
  }
  return {true, "200 triples"};
}

Outcome pm_a_counts() {
  int checked = 0;
  for (int len = 1; len <= 10; ++len) {
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits, ++checked) {
      if (count_pm_a_colorings(oracle::path(oracle::signs_from_bits(len, bits)), 1) != 2) {
        return {false, "path " + std::to_string(bits)};
      }
    }
  }
  for (int len = 3; len <= 10; ++len) {
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits, ++checked) {
      const std::size_t want = std::popcount(bits) % 2 == 0 ? 2 : 0;
      if (count_pm_a_colorings(oracle::cycle(oracle::signs_from_bits(len, bits)), 1) != want) {
        return {false, "cycle " + std::to_string(bits)};
      }
    }
  }
  return {true, std::to_string(checked) + " paths and cycles"};
}

Outcome all_negative() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> order(2, 7);
  std::uniform_real_distribution<double> density(0.3, 0.9);
  for (int trial = 0; trial < 60; ++trial) {
    const SignedGraph g = oracle::random_graph(rng, order(rng), density(rng), true).all_negative();
    const int classical = oracle::classical_index(g);
    if (chromatic_index(g).chromatic_index != classical) return {false, "trial " + std::to_string(trial)};
  }
  return {true, "60 connected graphs"};
}

}  // namespace

int main() {
  criterion(1, "signed cycles", 1, signed_cycles);
  criterion(2, "class counts", 60, class_counts);
  criterion(3, "complete-graph tables", 600, complete_tables);
  criterion(4, "K5 structure", 120, k5_structure);
  criterion(5, "book constructions", 120, book_constructions);
  criterion(6, "book exactness", 300, book_exactness);
  criterion(7, "normalization", 120, normalization);
  criterion(8, "switching invariance", 120, switching_invariance);
  criterion(9, "plus-minus-a counts", 1, pm_a_counts);
  criterion(10, "all-negative correspondence", 120, all_negative);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
