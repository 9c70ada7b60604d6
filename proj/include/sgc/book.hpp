#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgc/coloring.hpp"
#include "sgc/orbits.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

/// Generalized book graph B(m, n, k): n cycles of length m sharing a path on
/// k vertices.
///
/// Vertex naming: spine v_1..v_k are ids 1..k, then page i (1-based) holds
/// u_1^i..u_{m-k}^i as ids k + (i-1)(m-k) + 1 .. k + i(m-k).
///
/// Edge order: spine edges v_j v_{j+1} for j = 1..k-1, then for each page i
/// the path v_1 u_1^i, u_1^i u_2^i, ..., u_{m-k}^i v_k. Every edge is stored
/// with its endpoints in walk direction (away from v_1).
class Book {
 public:
  Book(int m, int n, int k);

  int m() const { return m_; }
  int n() const { return n_; }
  int k() const { return k_; }
  /// Internal vertices per page, m - k.
  int page_interior() const { return m_ - k_; }
  /// Edges per page path, m - k + 1.
  int page_edges() const { return m_ - k_ + 1; }
  /// m = 2k - 2: the spine is as long as a page path, so the graph is a theta
  /// graph of n + 1 equal paths and automorphisms can exchange the spine with
  /// a page.
  bool spine_is_page() const { return m_ == 2 * k_ - 2; }

  Vertex spine(int j) const;
  Vertex page_vertex(int page, int j) const;
  /// Edge v_j v_{j+1}, j in 1..k-1.
  EdgeIndex spine_edge(int j) const;
  /// j-th edge of the page path, j in 1..m-k+1; j = 1 is the spoke v_1 u_1^i.
  EdgeIndex page_edge(int page, int j) const;
  EdgeIndex spoke(int page) const { return page_edge(page, 1); }

  /// All-positive topology.
  const SignedGraph& graph() const { return graph_; }

  /// sigma_l: the spokes of pages 1..l are negative. Throws std::out_of_range.
  SignedGraph canonical_signature(int l) const;

  /// Vertex renaming u_j^i -> u_j^{page_image[i-1]}; spine fixed.
  VertexPermutation page_relabeling(const std::vector<int>& page_image) const;

 private:
  int m_, n_, k_;
  SignedGraph graph_;
};

Book build_book(int m, int n, int k);

/// Closed form: every signed B(m, n, k) has chromatic index n + 1.
int book_index(int m, int n, int k, int l);

struct BookNormalization {
  SwitchSet switch_set;
  /// page_image[i - 1] is the new index of page i.
  std::vector<int> page_image;
  int l = 0;
};

/// Finds X and a page renaming carrying an arbitrary signature on the book
/// topology onto sigma_l. Switching makes the spine and every page path minus
/// its spoke positive (v_1 is never switched), so each page cycle's sign sits
/// on its spoke; negative-spoke pages are then moved to the front, stably.
BookNormalization normalize(const Book& book, const SignedGraph& signed_book);

/// Switches by X, then renames pages.
SignedGraph apply_normalization(const Book& book, const SignedGraph& signed_book,
                                const BookNormalization& norm);

inline constexpr std::size_t kBookExhaustiveEdgeLimit = 14;

struct BookClassCount {
  int classes = 0;
  std::vector<SignedGraph> representatives;
  std::vector<SignatureOrbit> orbits;        // empty unless exhaustive
  bool exhaustive = false;
};

/// Closed-form class count with one representative sigma_l per class: n + 1
/// classes sigma_0..sigma_n, except when spine_is_page(), where sigma_l and
/// sigma_{n+1-l} coincide and only sigma_0..sigma_{floor((n+1)/2)} remain.
/// With exhaustive = true the count instead comes from the orbits of all
/// 2^|E| signatures under switchings and automorphisms (throws
/// std::length_error above kBookExhaustiveEdgeLimit edges).
BookClassCount class_count(const Book& book, bool exhaustive);

struct Discrepancy {
  std::string construction;
  std::vector<std::string> problems;
};

struct BookColoring {
  SignedGraph graph;  // (B, sigma_l)
  IncidenceColoring coloring;
  std::string construction;
  /// Set when the schedule did not produce a proper coloring and the exact
  /// solver supplied the result instead.
  std::optional<Discrepancy> discrepancy;
};

/// Constructive proper (n+1)-coloring of (B(m,n,k), sigma_l).
BookColoring color_book(const Book& book, int l);

/// A classical (n+1)-edge coloring (values 1..n+1) of the book topology.
std::vector<int> classical_book_coloring(const Book& book);

}  // namespace sgc
