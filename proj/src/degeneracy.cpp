#include "dgs/degeneracy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dgs {

DegenCheck check_degenerate(const Instance& inst, const std::vector<int>& S) {
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  std::vector<char> in_set(n, 0);
  for (int u : S) {
    if (u < 0 || u >= n) throw std::invalid_argument("invalid vertex " + std::to_string(u));
    if (in_set[u]) throw std::invalid_argument("repeated vertex " + std::to_string(u));
    in_set[u] = 1;
  }
  std::vector<int> residual_deg(n, 0);
  for (int u : S)
    for (int v : g.neighbors(u))
      if (in_set[v]) ++residual_deg[u];

  std::vector<int> sorted(S);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> peeled;
  peeled.reserve(S.size());
  bool progress = true;
  std::size_t remaining = S.size();
  while (remaining > 0 && progress) {
    progress = false;
    for (int u : sorted) {
      if (!in_set[u]) continue;
      if (residual_deg[u] <= inst.kappa[u]) {
        in_set[u] = 0;
        --remaining;
        for (int v : g.neighbors(u))
          if (in_set[v]) --residual_deg[v];
        peeled.push_back(u);
        progress = true;
      }
    }
  }
  DegenCheck result;
  if (remaining == 0) {
    result.degenerate = true;
    result.order.assign(peeled.rbegin(), peeled.rend());
  } else {
    for (int u : sorted)
      if (in_set[u]) result.stuck.push_back(u);
  }
  return result;
}

bool ordering_certifies(const Graph& g, const std::vector<int>& caps,
                        const std::vector<int>& order) {
  std::vector<char> earlier(g.vertex_count(), 0);
  for (int u : order) {
    if (u < 0 || u >= g.vertex_count() || earlier[u]) return false;
    int back = 0;
    for (int v : g.neighbors(u))
      if (earlier[v]) ++back;
    if (back > caps[u]) return false;
    earlier[u] = 1;
  }
  return true;
}

std::vector<int> dual_threshold(const Instance& inst) {
  const int n = inst.size();
  std::vector<int> tau(n);
  for (int u = 0; u < n; ++u) tau[u] = inst.graph.degree(u) - inst.kappa[u];
  return tau;
}

ActivationResult simulate_activation(const Graph& g, const std::vector<int>& tau,
                                     const std::vector<int>& seeds) {
  const int n = g.vertex_count();
  ActivationResult res;
  res.active.assign(n, false);
  for (int u : seeds) {
    if (u < 0 || u >= n) throw std::invalid_argument("invalid seed " + std::to_string(u));
    res.active[u] = true;
  }
  std::vector<int> active_neighbors(n, 0);
  for (int u = 0; u < n; ++u)
    if (res.active[u])
      for (int v : g.neighbors(u)) ++active_neighbors[v];

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> newly;
    for (int u = 0; u < n; ++u)
      if (!res.active[u] && active_neighbors[u] >= tau[u]) newly.push_back(u);
    if (!newly.empty()) {
      changed = true;
      ++res.rounds;
      for (int u : newly) {
        res.active[u] = true;
        for (int v : g.neighbors(u)) ++active_neighbors[v];
      }
    }
  }
  return res;
}

bool is_dynamic_monopoly(const Graph& g, const std::vector<int>& tau,
                         const std::vector<int>& seeds) {
  const auto res = simulate_activation(g, tau, seeds);
  return std::all_of(res.active.begin(), res.active.end(), [](bool b) { return b; });
}

}  // namespace dgs
