#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sgc/coloring.hpp"
#include "sgc/signed_graph.hpp"

namespace sgc {

// Line formats.
//
//   graph:     p sgraph <vertices> <edges>
//              c <comment>
//              e <u> <v> <+1|-1>
//
//   coloring:  s chi <q>
//              i <edge, 1-based> <color at first endpoint> <color at second>

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

SignedGraph parse_graph(std::string_view text);
std::string write_graph(const SignedGraph& g);

/// Colors are range-checked against M_q here; properness is not.
IncidenceColoring parse_coloring(std::string_view text);
std::string write_coloring(const IncidenceColoring& coloring);

}  // namespace sgc
