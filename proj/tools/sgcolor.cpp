// sgcolor: command-line front end for the signed edge coloring library.
//
// Exit codes: 0 success or true, 1 checked-false, 2 usage or parse error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sgc/book.hpp"
#include "sgc/complete.hpp"
#include "sgc/formats.hpp"
#include "sgc/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

sgc::SignedGraph load_graph(const std::string& path) {
  try {
    return sgc::parse_graph(slurp(path));
  } catch (const sgc::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

sgc::IncidenceColoring load_coloring(const std::string& path) {
  try {
    return sgc::parse_coloring(slurp(path));
  } catch (const sgc::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string format_switch_set(const sgc::SwitchSet& x) {
  std::string s = "switch";
  for (sgc::Vertex v : x.vertices()) s += " " + std::to_string(v);
  return s;
}

int cmd_solve(const std::string& path) {
  const sgc::SignedGraph g = load_graph(path);
  const sgc::SolveResult r = sgc::chromatic_index(g);
  std::cout << "chi " << r.chromatic_index << '\n' << sgc::write_coloring(r.witness);
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
  const sgc::SignedGraph g = load_graph(graph_path);
  const sgc::IncidenceColoring c = load_coloring(coloring_path);
  const sgc::ProperReport report = sgc::check_proper(g, c);
  if (report.proper) {
    std::cout << "proper\n";
    return kOk;
  }
  std::cout << "improper\n";
  for (const sgc::Violation& v : report.violations) std::cout << v.describe() << '\n';
  return kFalse;
}

int cmd_book(int m, int n, int k, int l, bool solve) {
  sgc::Book book = [&] {
    try {
      return sgc::build_book(m, n, k);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (l < 0 || l > n) throw UsageError("--l must lie in 0.." + std::to_string(n));
  const sgc::BookColoring result = sgc::color_book(book, l);
  std::cout << "c book B(" << m << "," << n << "," << k << ") sigma_" << l << '\n';
  std::cout << "c construction " << result.construction << '\n';
  if (result.discrepancy) {
    for (const std::string& p : result.discrepancy->problems) std::cout << "c discrepancy " << p << '\n';
  }
  std::cout << sgc::write_graph(result.graph) << sgc::write_coloring(result.coloring);
  if (!solve) return kOk;
  const int constructive = result.coloring.palette().q();
  const int exact = sgc::chromatic_index(result.graph).chromatic_index;
  std::cout << "c constructive chi " << constructive << '\n';
  std::cout << "c solver chi " << exact << '\n';
  std::cout << "c " << (constructive == exact ? "agree" : "disagree") << '\n';
  return constructive == exact ? kOk : kFalse;
}

// Book parameters whose topology matches g exactly, if any.
std::optional<sgc::Book> detect_book(const sgc::SignedGraph& g) {
  const int v = g.vertex_count();
  const auto e = static_cast<int>(g.edge_count());
  for (int k = 2; k < v; ++k) {
    for (int n = 2; k + n <= v; ++n) {
      if ((v - k) % n != 0) continue;
      const int m = k + (v - k) / n;
      if (k - 1 + n * (m - k + 1) != e) continue;
      sgc::Book book(m, n, k);
      if (book.graph().same_underlying(g)) return book;
    }
  }
  return std::nullopt;
}

int cmd_normalize(const std::string& path) {
  const sgc::SignedGraph g = load_graph(path);
  if (const auto book = detect_book(g)) {
    const sgc::BookNormalization norm = sgc::normalize(*book, g);
    std::cout << "c book B(" << book->m() << "," << book->n() << "," << book->k() << ")\n";
    std::cout << "c " << format_switch_set(norm.switch_set) << '\n';
    std::cout << "c pages";
    for (std::size_t i = 0; i < norm.page_image.size(); ++i) {
      std::cout << ' ' << i + 1 << "->" << norm.page_image[i];
    }
    std::cout << "\nc l " << norm.l << '\n';
    std::cout << sgc::write_graph(sgc::apply_normalization(*book, g, norm));
    return kOk;
  }
  // Any graph: make a spanning forest positive.
  const sgc::BalanceReport balance = sgc::check_balance(g);
  std::vector<sgc::Vertex> x;
  for (sgc::Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (balance.potential[static_cast<std::size_t>(v)] == sgc::Sign::Negative) x.push_back(v);
  }
  const sgc::SwitchSet set(std::move(x));
  const sgc::SignedGraph out = sgc::switched(g, set);
  std::cout << "c " << format_switch_set(set) << '\n';
  std::cout << "c negative " << out.negative_edges().size() << '\n';
  std::cout << sgc::write_graph(out);
  return kOk;
}

std::string negative_edge_list(const sgc::SignedGraph& g) {
  std::string s;
  for (const sgc::SignedEdge& e : g.edges()) {
    if (e.sign != sgc::Sign::Negative) continue;
    if (!s.empty()) s += ',';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s.empty() ? "-" : s;
}

int cmd_complete(int n, bool enumerate) {
  std::vector<sgc::SwitchClass> classes;
  try {
    classes = sgc::enumerate_switch_classes(n);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  std::cout << "class\tmask\torbit_size\tmin_negative\tnegative_triangles\tnegative_pentagons\tchi";
  if (enumerate) std::cout << "\tnegative_edges";
  std::cout << '\n';
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const sgc::SwitchClass& c = classes[i];
    std::cout << i + 1 << '\t' << c.mask << '\t' << c.orbit_size << '\t' << c.profile.min_negative_edges
              << '\t' << c.profile.negative_triangles << '\t'
              << (c.profile.negative_pentagons ? std::to_string(*c.profile.negative_pentagons) : "-")
              << '\t' << c.chromatic_index;
    if (enumerate) std::cout << '\t' << negative_edge_list(c.representative);
    std::cout << '\n';
  }
  return kOk;
}

int cmd_equivalent(const std::string& a_path, const std::string& b_path) {
  const sgc::SignedGraph a = load_graph(a_path);
  const sgc::SignedGraph b = load_graph(b_path);
  if (!a.same_underlying(b)) throw UsageError("the two graphs have different underlying graphs");
  if (const auto x = sgc::switching_equivalent(a, b)) {
    std::cout << "equivalent\n" << format_switch_set(*x) << '\n';
    return kOk;
  }
  std::cout << "not equivalent\n";
  return kFalse;
}

const char* outcome_name(sgc::ProbeOutcome o) {
  switch (o) {
    case sgc::ProbeOutcome::Solved: return "solved";
    case sgc::ProbeOutcome::Class2Confirmed: return "class2";
    case sgc::ProbeOutcome::Unknown: return "unknown";
  }
  return "?";
}

int cmd_probe(int n, int samples, double budget, std::uint64_t seed) {
  sgc::ProbeReport report;
  try {
    report = sgc::probe_conjecture(n, samples, std::chrono::duration<double>(budget), seed);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  std::cout << "sample\tmask\toutcome\n";
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    std::cout << i + 1 << '\t' << report.samples[i].signature << '\t'
              << outcome_name(report.samples[i].outcome) << '\n';
  }
  std::cout << "c n " << n << " q " << n - 1 << " seed " << seed << '\n';
  std::cout << "c solved " << report.count(sgc::ProbeOutcome::Solved) << " class2 "
            << report.count(sgc::ProbeOutcome::Class2Confirmed) << " unknown "
            << report.count(sgc::ProbeOutcome::Unknown) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper edge coloring of signed graphs"};
  app.require_subcommand(1);

  std::string path_a, path_b;
  int m = 0, n = 0, k = 0, l = 0, samples = 10;
  double budget = 1.0;
  std::uint64_t seed = 1;
  bool solve = false, table = false, enumerate = false;

  auto* solve_cmd = app.add_subcommand("solve", "Exact chromatic index with a witness coloring");
  solve_cmd->add_option("graph", path_a, "Graph file, - for stdin")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring for properness");
  verify_cmd->add_option("graph", path_a, "Graph file")->required();
  verify_cmd->add_option("coloring", path_b, "Coloring file")->required();

  auto* book_cmd = app.add_subcommand("book", "Constructive coloring of a signed book graph");
  book_cmd->add_option("--m", m, "Cycle length")->required();
  book_cmd->add_option("--n", n, "Number of pages")->required();
  book_cmd->add_option("--k", k, "Spine vertices")->required();
  book_cmd->add_option("--l", l, "Negative spokes")->required();
  book_cmd->add_flag("--solve", solve, "Cross-check with the exact solver");

  auto* normalize_cmd = app.add_subcommand("normalize", "Switch to a normal form");
  normalize_cmd->add_option("graph", path_a, "Graph file, - for stdin")->required();

  auto* complete_cmd = app.add_subcommand("complete", "Switching classes of signed K_n");
  complete_cmd->add_option("--n", n, "Order")->required();
  auto* table_flag = complete_cmd->add_flag("--table", table, "Class table (default)");
  complete_cmd->add_flag("--enumerate", enumerate, "Also list negative edges")->excludes(table_flag);

  auto* equivalent_cmd = app.add_subcommand("equivalent", "Switching equivalence test");
  equivalent_cmd->add_option("first", path_a, "Graph file")->required();
  equivalent_cmd->add_option("second", path_b, "Graph file")->required();

  auto* probe_cmd = app.add_subcommand("probe", "Budgeted search for (n-1)-colorings of signed K_n");
  probe_cmd->add_option("--n", n, "Order (even)")->required();
  probe_cmd->add_option("--samples", samples, "Signatures to try")->required();
  probe_cmd->add_option("--budget", budget, "Seconds per sample")->required()->check(CLI::PositiveNumber);
  probe_cmd->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(path_a);
    if (*verify_cmd) return cmd_verify(path_a, path_b);
    if (*book_cmd) return cmd_book(m, n, k, l, solve);
    if (*normalize_cmd) return cmd_normalize(path_a);
    if (*complete_cmd) return cmd_complete(n, enumerate);
    if (*equivalent_cmd) return cmd_equivalent(path_a, path_b);
    if (*probe_cmd) return cmd_probe(n, samples, budget, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
