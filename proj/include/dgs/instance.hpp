#pragma once

#include <vector>

#include "dgs/graph.hpp"
#include "dgs/rational.hpp"

namespace dgs {

// A graph with a positive rational weight c(u) and an integer capacity
// kappa(u), 0 <= kappa(u) <= d(u), per vertex. Immutable after construction.
struct Instance {
  Graph graph;
  std::vector<Rational> c;
  std::vector<int> kappa;

  int size() const { return graph.vertex_count(); }
  Rational total_weight() const;
};

// Validates and builds an Instance. Empty profiles take the defaults
// c = 1, kappa = 0. Throws std::invalid_argument naming the offending vertex.
Instance make_instance(Graph g, std::vector<Rational> c = {}, std::vector<int> kappa = {});

}  // namespace dgs
