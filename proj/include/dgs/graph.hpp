#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dgs {

// Finite simple undirected graph on vertices 0..n-1.
// Adjacency lists are kept sorted; no self-loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on out-of-range endpoints, self-loops,
  // or duplicate edges (callers that tolerate duplicates dedup first).
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }
  bool has_edge(int u, int v) const;

  // Neighborhood as a bitmask; valid only when vertex_count() <= 64.
  bool has_masks() const { return n_ <= 64; }
  std::uint64_t neighbor_mask(int u) const { return masks_[u]; }

  std::vector<std::pair<int, int>> edges() const;

  // Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace dgs
