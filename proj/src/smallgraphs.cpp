#include "dgs/smallgraphs.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dgs {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (mask & (std::uint64_t{1} << bit)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::uint64_t labeled_graph_count(int n) {
  const int pairs = n * (n - 1) / 2;
  if (pairs > 63) throw std::invalid_argument("too many vertex pairs to enumerate");
  return std::uint64_t{1} << pairs;
}

namespace {

// Connectivity straight off the edge mask, no Graph construction.
bool mask_connected(int n, std::uint64_t mask) {
  if (n <= 1) return true;
  std::vector<std::uint64_t> adj(n, 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (mask & (std::uint64_t{1} << bit)) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      const int u = __builtin_ctzll(frontier);
      frontier &= frontier - 1;
      next |= adj[u] & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return seen == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace

void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(const Graph&)>& fn) {
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (connected_only && !mask_connected(n, mask)) continue;
    fn(graph_from_edge_mask(n, mask));
  }
}

Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  // 53-bit threshold keeps the draw deterministic and platform-independent.
  const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((rng.next() >> 11) < threshold) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, edges);
}

}  // namespace dgs
