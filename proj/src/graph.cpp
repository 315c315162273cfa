#include "dgs/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dgs {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(n_);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  m_ = static_cast<int>(edges.size());
  for (int u = 0; u < n_; ++u) {
    std::sort(adj_[u].begin(), adj_[u].end());
    if (std::adjacent_find(adj_[u].begin(), adj_[u].end()) != adj_[u].end())
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(u));
  }
  if (n_ <= 64) {
    masks_.resize(n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u]) masks_[u] |= std::uint64_t{1} << v;
  }
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace dgs
