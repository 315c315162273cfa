#pragma once

#include <cstdint>
#include <functional>

#include "dgs/graph.hpp"
#include "dgs/rng.hpp"

namespace dgs {

// Labeled graph on n vertices from an upper-triangle edge bitmask,
// bit order x(0,1), x(0,2), x(1,2), x(0,3), ... (graph6 bit order).
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Number of labeled graphs on n vertices (n*(n-1)/2 <= 63).
std::uint64_t labeled_graph_count(int n);

// Calls fn for every labeled graph on n vertices, in ascending mask order,
// optionally restricted to connected graphs.
void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(const Graph&)>& fn);

Graph random_gnp(int n, double p, Rng& rng);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

}  // namespace dgs
