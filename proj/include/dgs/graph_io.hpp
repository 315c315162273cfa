#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dgs/graph.hpp"
#include "dgs/rational.hpp"

namespace dgs {

struct EdgeListGraph {
  Graph graph;
  std::size_t duplicate_edges = 0;  // duplicate lines collapsed during parsing
};

// Edge-list format: '#' comment lines ignored; header "n m"; then m lines "u v".
// Duplicate edges collapse (counted); malformed input throws std::invalid_argument
// with a 1-based line number.
EdgeListGraph parse_edge_list(std::istream& in);
EdgeListGraph parse_edge_list(const std::string& text);

std::string to_edge_list(const Graph& g);

// Standard graph6 word, n < 63. Throws std::invalid_argument on bad bytes,
// truncation, or trailing garbage.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

// Per-vertex profile file: lines "v c kappa" with c an integer or "p/q";
// vertices not listed default to c = 1, kappa = 0.
struct VertexProfiles {
  std::vector<Rational> c;
  std::vector<int> kappa;
};
VertexProfiles parse_profile_file(std::istream& in, int n);

}  // namespace dgs
