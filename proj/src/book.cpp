#include "sgc/book.hpp"

#include <stdexcept>
#include <utility>

#include "sgc/isomorphism.hpp"
#include "sgc/solver.hpp"

namespace sgc {

namespace {

SignedGraph book_topology(int m, int n, int k) {
  if (m < 3 || n < 2 || k < 2 || m - k < 1) {
    throw std::invalid_argument("B(m,n,k) needs m >= 3, n >= 2, k >= 2 and m - k >= 1; got (" +
                                std::to_string(m) + "," + std::to_string(n) + "," +
                                std::to_string(k) + ")");
  }
  const int interior = m - k;
  std::vector<SignedEdge> edges;
  for (int j = 1; j < k; ++j) edges.push_back({j, j + 1, Sign::Positive});
  for (int i = 1; i <= n; ++i) {
    const int base = k + (i - 1) * interior;
    Vertex prev = 1;
    for (int j = 1; j <= interior; ++j) {
      edges.push_back({prev, base + j, Sign::Positive});
      prev = base + j;
    }
    edges.push_back({prev, k, Sign::Positive});
  }
  return SignedGraph(k + n * interior, std::move(edges));
}

}  // namespace

Book::Book(int m, int n, int k) : m_(m), n_(n), k_(k), graph_(book_topology(m, n, k)) {}

Book build_book(int m, int n, int k) { return Book(m, n, k); }

Vertex Book::spine(int j) const {
  if (j < 1 || j > k_) throw std::out_of_range("spine index out of range");
  return j;
}

Vertex Book::page_vertex(int page, int j) const {
  if (page < 1 || page > n_ || j < 1 || j > page_interior()) {
    throw std::out_of_range("page vertex index out of range");
  }
  return k_ + (page - 1) * page_interior() + j;
}

EdgeIndex Book::spine_edge(int j) const {
  if (j < 1 || j >= k_) throw std::out_of_range("spine edge index out of range");
  return static_cast<EdgeIndex>(j - 1);
}

EdgeIndex Book::page_edge(int page, int j) const {
  if (page < 1 || page > n_ || j < 1 || j > page_edges()) {
    throw std::out_of_range("page edge index out of range");
  }
  return static_cast<EdgeIndex>((k_ - 1) + (page - 1) * page_edges() + (j - 1));
}

SignedGraph Book::canonical_signature(int l) const {
  if (l < 0 || l > n_) {
    throw std::out_of_range("sigma_l needs 0 <= l <= n, got l = " + std::to_string(l));
  }
  std::vector<Sign> signs(graph_.edge_count(), Sign::Positive);
  for (int i = 1; i <= l; ++i) signs[spoke(i)] = Sign::Negative;
  return graph_.with_signature(signs);
}

VertexPermutation Book::page_relabeling(const std::vector<int>& page_image) const {
  if (static_cast<int>(page_image.size()) != n_) throw std::invalid_argument("page permutation size");
  VertexPermutation p = VertexPermutation::identity(graph_.vertex_count());
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= page_interior(); ++j) {
      p.image[static_cast<std::size_t>(page_vertex(i, j) - 1)] =
          page_vertex(page_image[static_cast<std::size_t>(i - 1)], j);
    }
  }
  return p;
}

int book_index(int m, int n, int k, int l) {
  const Book book(m, n, k);
  if (l < 0 || l > n) throw std::out_of_range("l out of range");
  return book.n() + 1;
}

// ---------------------------------------------------------------------------
// Normalization

BookNormalization normalize(const Book& book, const SignedGraph& signed_book) {
  if (!signed_book.same_underlying(book.graph()) ||
      signed_book.edges().size() != book.graph().edges().size()) {
    throw std::invalid_argument("signature is not on the book topology");
  }
  const SignedGraph& g = signed_book;
  std::vector<Sign> potential(static_cast<std::size_t>(g.vertex_count()) + 1, Sign::Positive);
  auto pot = [&](Vertex v) -> Sign& { return potential[static_cast<std::size_t>(v)]; };
  auto sign_between = [&](Vertex a, Vertex b) { return g.sign(*g.find_edge(a, b)); };

  // Tree: the spine plus each page path without its spoke, rooted at v_1.
  for (int j = 1; j < book.k(); ++j) {
    pot(book.spine(j + 1)) = pot(book.spine(j)) * sign_between(book.spine(j), book.spine(j + 1));
  }
  for (int i = 1; i <= book.n(); ++i) {
    Vertex next = book.spine(book.k());
    for (int j = book.page_interior(); j >= 1; --j) {
      const Vertex u = book.page_vertex(i, j);
      pot(u) = pot(next) * sign_between(u, next);
      next = u;
    }
  }

  BookNormalization norm;
  std::vector<Vertex> x;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (pot(v) == Sign::Negative) x.push_back(v);
  }
  norm.switch_set = SwitchSet(std::move(x));

  std::vector<int> negative_pages, positive_pages;
  for (int i = 1; i <= book.n(); ++i) {
    const Vertex u1 = book.page_vertex(i, 1);
    const Sign s = sign_between(book.spine(1), u1) * pot(u1);
    (s == Sign::Negative ? negative_pages : positive_pages).push_back(i);
  }
  norm.l = static_cast<int>(negative_pages.size());
  norm.page_image.assign(static_cast<std::size_t>(book.n()), 0);
  int next_index = 1;
  for (int i : negative_pages) norm.page_image[static_cast<std::size_t>(i - 1)] = next_index++;
  for (int i : positive_pages) norm.page_image[static_cast<std::size_t>(i - 1)] = next_index++;
  return norm;
}

namespace {

// Moves per-edge data of page i to page page_image[i-1]; spine untouched.
template <typename T>
std::vector<T> move_pages(const Book& book, const std::vector<T>& per_edge,
                          const std::vector<int>& page_image) {
  std::vector<T> out = per_edge;
  for (int i = 1; i <= book.n(); ++i) {
    const int target = page_image.at(static_cast<std::size_t>(i - 1));
    for (int j = 1; j <= book.page_edges(); ++j) {
      out[book.page_edge(target, j)] = per_edge[book.page_edge(i, j)];
    }
  }
  return out;
}

}  // namespace

SignedGraph apply_normalization(const Book& book, const SignedGraph& signed_book,
                                const BookNormalization& norm) {
  const SignedGraph s = switched(signed_book, norm.switch_set);
  return book.graph().with_signature(move_pages(book, s.signature(), norm.page_image));
}

BookClassCount class_count(const Book& book, bool exhaustive) {
  BookClassCount out;
  const int top = book.spine_is_page() ? (book.n() + 1) / 2 : book.n();
  for (int l = 0; l <= top; ++l) out.representatives.push_back(book.canonical_signature(l));
  out.classes = top + 1;
  if (!exhaustive) return out;
  if (book.graph().edge_count() > kBookExhaustiveEdgeLimit) {
    throw std::length_error("exhaustive class count is limited to " +
                            std::to_string(kBookExhaustiveEdgeLimit) + " edges");
  }
  SignatureAction action = SignatureAction::switchings(book.graph());
  for (const VertexPermutation& p : automorphisms(book.graph())) {
    action.add_vertex_permutation(book.graph(), p);
  }
  out.orbits = signature_orbits(book.graph().edge_count(), action);
  out.classes = static_cast<int>(out.orbits.size());
  out.exhaustive = true;
  return out;
}

// ---------------------------------------------------------------------------
// Constructive colorings
//
// "Color the path with the pattern ((a)(b))" means: walking the path away from
// v_1, every edge gets a at its near end and b at its far end. Page and spine
// edges are stored in walk direction, so near = first endpoint.

namespace {

class Schedule {
 public:
  Schedule(const Book& book, const SignedGraph& g)
      : book_(book), g_(g), colors_(g.edge_count()), assigned_(g.edge_count(), false) {}

  void set(EdgeIndex e, Color near, Color far) {
    if (assigned_[e]) problems_.push_back("edge " + std::to_string(e + 1) + " colored twice");
    if (near != -to_int(g_.sign(e)) * far) {
      problems_.push_back("pattern (" + std::to_string(near) + ")(" + std::to_string(far) +
                          ") does not fit the sign of edge " + std::to_string(e + 1));
    }
    colors_[e] = {near, far};
    assigned_[e] = true;
  }

  // Spine edges j in [from, k-1].
  void spine(int from, Color near, Color far) {
    for (int j = from; j < book_.k(); ++j) set(book_.spine_edge(j), near, far);
  }
  // Page edges j in [from, to]; to = 0 means through the last edge.
  void page(int i, int from, int to, Color near, Color far) {
    if (to == 0) to = book_.page_edges();
    for (int j = from; j <= to; ++j) set(book_.page_edge(i, j), near, far);
  }
  void full_page(int i, Color near, Color far) { page(i, 1, 0, near, far); }
  /// v_1 u_1^i ... u_{m-k}^i, i.e. everything but the last edge.
  void page_to_last_interior(int i, Color near, Color far) {
    page(i, 1, book_.page_edges() - 1, near, far);
  }
  /// u_1^i ... u_{m-k}^i v_k, i.e. everything but the spoke.
  void page_after_spoke(int i, Color near, Color far) { page(i, 2, 0, near, far); }
  void last_edge(int i, Color near, Color far) {
    set(book_.page_edge(i, book_.page_edges()), near, far);
  }
  void spoke(int i, Color near, Color far) { set(book_.spoke(i), near, far); }

  IncidenceColoring coloring() const { return IncidenceColoring(ColorSet(book_.n() + 1), colors_); }

  std::vector<std::string> problems() const {
    std::vector<std::string> out = problems_;
    for (EdgeIndex e = 0; e < assigned_.size(); ++e) {
      if (!assigned_[e]) out.push_back("edge " + std::to_string(e + 1) + " left uncolored");
    }
    return out;
  }

 private:
  const Book& book_;
  const SignedGraph& g_;
  std::vector<EdgeColors> colors_;
  std::vector<bool> assigned_;
  std::vector<std::string> problems_;
};

// Whole pages i in [from, to]: ((i+1)/2)(-(i+1)/2) for odd i,
// (-i/2)(i/2) for even i.
void pages_odd_up_even_down(Schedule& s, int from, int to) {
  for (int i = from; i <= to; ++i) {
    if (i % 2 == 1) {
      s.full_page(i, (i + 1) / 2, -((i + 1) / 2));
    } else {
      s.full_page(i, -(i / 2), i / 2);
    }
  }
}

// (B, sigma_0).
void schedule_sigma0(const Book& b, Schedule& s) {
  const int n = b.n();
  if (n % 2 == 0) {
    s.spine(1, -1, 1);
    s.page_to_last_interior(1, 1, -1);
    s.last_edge(1, 0, 0);
    s.spoke(2, 0, 0);
    s.page_after_spoke(2, 1, -1);
    pages_odd_up_even_down(s, 3, n);
  } else {
    const int r = (n + 1) / 2;
    s.spine(1, -r, r);
    pages_odd_up_even_down(s, 1, n);
  }
}

// (B, {v_1 v_2}); switching v_1 afterwards gives sigma_n.
void schedule_spine_negative(const Book& b, Schedule& s) {
  const int n = b.n();
  const int k = b.k();
  if (n % 2 == 0) {
    s.set(b.spine_edge(1), 0, 0);
    if (k == 2) {
      pages_odd_up_even_down(s, 1, n);
      return;
    }
    s.spine(2, 1, -1);
    s.page_to_last_interior(1, 1, -1);
    s.last_edge(1, 0, 0);
    pages_odd_up_even_down(s, 2, n);
    return;
  }
  const int r = (n + 1) / 2;
  s.set(b.spine_edge(1), -r, -r);
  if (k >= 3) s.spine(2, r, -r);
  s.page_to_last_interior(1, 1, -1);
  s.last_edge(1, -r, r);
  pages_odd_up_even_down(s, 2, n - 1);
  s.page_to_last_interior(n, r, -r);
  s.last_edge(n, 1, -1);
}

// (B, sigma_1).
void schedule_sigma1(const Book& b, Schedule& s) {
  const int n = b.n();
  if (n % 2 == 0) {
    const int r = n / 2;
    s.spine(1, -r, r);
    s.spoke(1, 0, 0);
    s.page_after_spoke(1, r, -r);
    for (int i = 2; i <= n - 1; ++i) {
      if (i % 2 == 0) {
        s.full_page(i, i / 2, -(i / 2));
      } else {
        s.full_page(i, -((i - 1) / 2), (i - 1) / 2);
      }
    }
    s.page_to_last_interior(n, r, -r);
    s.last_edge(n, 0, 0);
  } else {
    const int r = (n + 1) / 2;
    s.spine(1, -r, r);
    s.spoke(1, 1, 1);
    s.page_after_spoke(1, r, -r);
    pages_odd_up_even_down(s, 2, n - 1);
    s.page_to_last_interior(n, r, -r);
    s.last_edge(n, 1, -1);
  }
}

// (B, sigma_l), 2 <= l <= n - 1. Spokes of pages 1..l are negative, so each
// gets one color on both incidences.
void schedule_sigma_l(const Book& b, Schedule& s, int l) {
  const int n = b.n();
  if (n % 2 == 0) {
    const int r = n / 2;
    s.spine(1, -r, r);
    if (l % 2 == 0) {
      s.spoke(1, 0, 0);
      for (int i = 2; i <= l; ++i) {
        const Color c = i % 2 == 0 ? i / 2 : -((i - 1) / 2);
        s.spoke(i, c, c);
      }
      s.page_after_spoke(1, l / 2, -(l / 2));
      for (int i = 2; i <= l; ++i) {
        if (i % 2 == 0) {
          s.page_after_spoke(i, -(i / 2), i / 2);
        } else {
          s.page_after_spoke(i, (i - 1) / 2, -((i - 1) / 2));
        }
      }
      s.page_to_last_interior(l + 1, -(l / 2), l / 2);
      s.last_edge(l + 1, 0, 0);
      for (int i = l + 2; i <= n; ++i) {
        if (i % 2 == 0) {
          s.full_page(i, i / 2, -(i / 2));
        } else {
          s.full_page(i, -((i - 1) / 2), (i - 1) / 2);
        }
      }
    } else {
      s.spoke(1, 0, 0);
      for (int i = 2; i <= l; ++i) {
        const Color c = i % 2 == 0 ? i / 2 : -((i - 1) / 2);
        s.spoke(i, c, c);
      }
      s.page_after_spoke(1, r, -r);
      for (int i = 2; i <= l; ++i) {
        if (i % 2 == 0) {
          s.page_after_spoke(i, -(i / 2), i / 2);
        } else {
          s.page_after_spoke(i, (i - 1) / 2, -((i - 1) / 2));
        }
      }
      for (int i = l + 1; i <= n - 1; ++i) {
        if (i % 2 == 0) {
          s.full_page(i, i / 2, -(i / 2));
        } else {
          s.full_page(i, -((i - 1) / 2), (i - 1) / 2);
        }
      }
      s.page_to_last_interior(n, r, -r);
      s.last_edge(n, 0, 0);
    }
    return;
  }

  const int r = (n + 1) / 2;
  s.spine(1, -r, r);
  if (l % 2 == 0) {
    for (int i = 1; i <= l; ++i) {
      const Color c = i % 2 == 1 ? (i + 1) / 2 : -(i / 2);
      s.spoke(i, c, c);
    }
    for (int i = 1; i <= l; ++i) {
      if (i % 2 == 1) {
        s.page_after_spoke(i, -((i + 1) / 2), (i + 1) / 2);
      } else {
        s.page_after_spoke(i, i / 2, -(i / 2));
      }
    }
    pages_odd_up_even_down(s, l + 1, n);
  } else {
    if (l > 2 * r - 3) {
      throw std::invalid_argument("odd l with odd n must satisfy l <= n - 2");
    }
    for (int i = 1; i <= l; ++i) {
      const Color c = i % 2 == 1 ? (i + 1) / 2 : -(i / 2);
      s.spoke(i, c, c);
    }
    s.page_after_spoke(1, (l + 1) / 2, -((l + 1) / 2));
    for (int i = 2; i <= l - 1; ++i) {
      if (i % 2 == 0) {
        s.page_after_spoke(i, i / 2, -(i / 2));
      } else {
        s.page_after_spoke(i, -((i + 1) / 2), (i + 1) / 2);
      }
    }
    s.page_after_spoke(l, -1, 1);
    pages_odd_up_even_down(s, l + 1, n);
  }
}

std::string parity(int x, const char* name) {
  return std::string(name) + (x % 2 == 0 ? " even" : " odd");
}

}  // namespace

std::vector<int> classical_book_coloring(const Book& book) {
  const int n = book.n();
  const int q = n + 1;
  const SignedGraph& g = book.graph();
  std::vector<int> colors(g.edge_count(), 0);

  // Spine alternates q, 1 starting at v_1.
  for (int j = 1; j < book.k(); ++j) colors[book.spine_edge(j)] = j % 2 == 1 ? q : 1;
  const int spine_last = (book.k() - 1) % 2 == 1 ? q : 1;

  // Page i starts with color i at v_1 (spine holds q there) and ends at v_k
  // with a color of {1..q} minus spine_last, shifted so no page starts and
  // ends with the same color.
  for (int i = 1; i <= n; ++i) {
    const int first = i;
    const int last = spine_last == q ? i % n + 1 : i + 1;
    const int len = book.page_edges();
    colors[book.page_edge(i, 1)] = first;
    colors[book.page_edge(i, len)] = last;
    for (int j = 2; j < len; ++j) {
      const int prev = colors[book.page_edge(i, j - 1)];
      int c = 1;
      while (c == prev || (j == len - 1 && c == last)) ++c;
      colors[book.page_edge(i, j)] = c;
    }
  }
  if (!is_proper_classical(g, colors, q)) {
    throw std::logic_error("classical book coloring is not proper");
  }
  return colors;
}

BookColoring color_book(const Book& book, int l) {
  const int n = book.n();
  if (l < 0 || l > n) throw std::out_of_range("sigma_l needs 0 <= l <= n, got " + std::to_string(l));
  const SignedGraph target = book.canonical_signature(l);
  const std::string ns = parity(n, "n");

  std::optional<IncidenceColoring> built;
  std::string name;
  std::vector<std::string> problems;

  if (l == n && book.m() % 2 == 1) {
    // (B, -) switches to sigma_n: lift a classical coloring and carry it over.
    name = "sigma_n, m odd, via all-negative";
    const SignedGraph negative = book.graph().all_negative();
    const int q = n + 1;
    const IncidenceColoring lifted = from_unsigned(negative, classical_book_coloring(book), q);
    const BookNormalization norm = normalize(book, negative);
    if (norm.l != n) problems.push_back("all-negative book normalized to l = " + std::to_string(norm.l));
    const IncidenceColoring moved = transport(negative, lifted, norm.switch_set);
    std::vector<EdgeColors> colors(moved.colors().begin(), moved.colors().end());
    built = IncidenceColoring(ColorSet(q), move_pages(book, colors, norm.page_image));
  } else if (l == n) {
    name = "sigma_n, m even, " + ns + (book.k() == 2 ? ", k = 2" : ", k >= 3") + ", via {v1v2}";
    std::vector<Sign> signs(book.graph().edge_count(), Sign::Positive);
    signs[book.spine_edge(1)] = Sign::Negative;
    const SignedGraph spine_negative = book.graph().with_signature(signs);
    Schedule s(book, spine_negative);
    schedule_spine_negative(book, s);
    problems = s.problems();
    built = transport(spine_negative, s.coloring(), SwitchSet{book.spine(1)});
  } else {
    Schedule s(book, target);
    if (l == 0) {
      name = "sigma_0, " + ns;
      schedule_sigma0(book, s);
    } else if (l == 1) {
      name = "sigma_1, " + ns;
      schedule_sigma1(book, s);
    } else {
      name = "sigma_l, " + ns + ", " + parity(l, "l");
      schedule_sigma_l(book, s, l);
    }
    problems = s.problems();
    built = s.coloring();
  }

  const ProperReport report = check_proper(target, *built);
  for (const Violation& v : report.violations) problems.push_back(v.describe());

  BookColoring out{target, *built, name, std::nullopt};
  if (!problems.empty()) {
    out.discrepancy = Discrepancy{name, problems};
    auto fallback = exists_coloring(target, n + 1);
    if (!fallback) {
      throw std::logic_error("no proper " + std::to_string(n + 1) + "-coloring of B(" +
                             std::to_string(book.m()) + "," + std::to_string(n) + "," +
                             std::to_string(book.k()) + ") sigma_" + std::to_string(l));
    }
    out.coloring = std::move(*fallback);
  }
  return out;
}

}  // namespace sgc
