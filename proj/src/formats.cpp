#include "sgc/formats.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace sgc {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view token, int line) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  long long value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

template <typename Handle>
void for_each_line(std::string_view text, Handle&& handle) {
  int number = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    const auto tokens = split(line);
    if (tokens.empty() || tokens.front() == "c") continue;
    handle(number, tokens);
  }
}

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t n, int line) {
  if (tokens.size() != n) {
    throw ParseError(line, "'" + std::string(tokens.front()) + "' line takes " +
                               std::to_string(n - 1) + " fields, got " +
                               std::to_string(tokens.size() - 1));
  }
}

}  // namespace

SignedGraph parse_graph(std::string_view text) {
  std::optional<long long> vertices;
  long long declared_edges = 0;
  int header_line = 0;
  std::vector<SignedEdge> edges;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0] == "p") {
      if (vertices) throw ParseError(line, "duplicate 'p' line");
      expect_arity(t, 4, line);
      if (t[1] != "sgraph") throw ParseError(line, "expected 'p sgraph', got 'p " + std::string(t[1]) + "'");
      vertices = to_int(t[2], line);
      declared_edges = to_int(t[3], line);
      if (*vertices < 1) throw ParseError(line, "vertex count must be positive");
      if (declared_edges < 0) throw ParseError(line, "edge count must be nonnegative");
      header_line = line;
    } else if (t[0] == "e") {
      if (!vertices) throw ParseError(line, "'e' line before 'p' line");
      expect_arity(t, 4, line);
      const long long u = to_int(t[1], line);
      const long long v = to_int(t[2], line);
      const long long s = to_int(t[3], line);
      if (u < 1 || u > *vertices || v < 1 || v > *vertices) {
        throw ParseError(line, "endpoint out of range 1.." + std::to_string(*vertices));
      }
      if (s != 1 && s != -1) throw ParseError(line, "sign must be +1 or -1");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                       s == 1 ? Sign::Positive : Sign::Negative});
    } else {
      throw ParseError(line, "unknown line type '" + std::string(t[0]) + "'");
    }
  });
  if (!vertices) throw ParseError(0, "missing 'p sgraph' line");
  if (static_cast<long long>(edges.size()) != declared_edges) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_edges) +
                                      " edges, found " + std::to_string(edges.size()));
  }
  try {
    return SignedGraph(static_cast<int>(*vertices), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(header_line, e.what());
  }
}

std::string write_graph(const SignedGraph& g) {
  std::ostringstream out;
  out << "p sgraph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const SignedEdge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << (e.sign == Sign::Positive ? "+1" : "-1") << '\n';
  }
  return out.str();
}

IncidenceColoring parse_coloring(std::string_view text) {
  std::optional<ColorSet> palette;
  std::vector<std::optional<EdgeColors>> colors;
  int header_line = 0;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0] == "s") {
      if (palette) throw ParseError(line, "duplicate 's' line");
      expect_arity(t, 3, line);
      if (t[1] != "chi") throw ParseError(line, "expected 's chi', got 's " + std::string(t[1]) + "'");
      const long long q = to_int(t[2], line);
      if (q < 0) throw ParseError(line, "palette size must be nonnegative");
      palette.emplace(static_cast<int>(q));
      header_line = line;
    } else if (t[0] == "i") {
      if (!palette) throw ParseError(line, "'i' line before 's' line");
      expect_arity(t, 4, line);
      const long long idx = to_int(t[1], line);
      const long long a = to_int(t[2], line);
      const long long b = to_int(t[3], line);
      if (idx < 1) throw ParseError(line, "edge index must be positive");
      for (long long c : {a, b}) {
        if (c < -64 || c > 64 || !palette->contains(static_cast<Color>(c))) {
          throw ParseError(line, "color " + std::to_string(c) + " is not in M_" +
                                     std::to_string(palette->q()));
        }
      }
      const auto e = static_cast<std::size_t>(idx - 1);
      if (colors.size() <= e) colors.resize(e + 1);
      if (colors[e]) throw ParseError(line, "edge " + std::to_string(idx) + " colored twice");
      colors[e] = EdgeColors{static_cast<Color>(a), static_cast<Color>(b)};
    } else {
      throw ParseError(line, "unknown line type '" + std::string(t[0]) + "'");
    }
  });
  if (!palette) throw ParseError(0, "missing 's chi' line");
  std::vector<EdgeColors> out;
  for (std::size_t e = 0; e < colors.size(); ++e) {
    if (!colors[e]) throw ParseError(header_line, "edge " + std::to_string(e + 1) + " has no colors");
    out.push_back(*colors[e]);
  }
  return IncidenceColoring(*palette, std::move(out));
}

std::string write_coloring(const IncidenceColoring& coloring) {
  std::ostringstream out;
  out << "s chi " << coloring.palette().q() << '\n';
  for (std::size_t e = 0; e < coloring.edge_count(); ++e) {
    const EdgeColors& c = coloring.at(e);
    out << "i " << e + 1 << ' ' << c.first << ' ' << c.second << '\n';
  }
  return out.str();
}

}  // namespace sgc
