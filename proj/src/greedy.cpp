#include "dgs/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dgs/bounds.hpp"

namespace dgs {

namespace {

void require_permutation(const Instance& inst, const std::vector<int>& pi) {
  const int n = inst.size();
  std::vector<char> seen(n, 0);
  if (static_cast<int>(pi.size()) != n)
    throw std::invalid_argument("ordering length does not match vertex count");
  for (int u : pi) {
    if (u < 0 || u >= n || seen[u])
      throw std::invalid_argument("not a permutation of the vertices");
    seen[u] = 1;
  }
}

std::vector<int> back_degrees(const Graph& g, const std::vector<int>& pi) {
  std::vector<char> earlier(g.vertex_count(), 0);
  std::vector<int> back(pi.size(), 0);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    for (int v : g.neighbors(pi[i]))
      if (earlier[v]) ++back[i];
    earlier[pi[i]] = 1;
  }
  return back;
}

}  // namespace

DegenWitness select_degenerate_from_order(const Instance& inst, const std::vector<int>& pi) {
  require_permutation(inst, pi);
  const auto back = back_degrees(inst.graph, pi);
  DegenWitness w;
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (back[i] <= inst.kappa[pi[i]]) w.order.push_back(pi[i]);
  return w;
}

IncentiveAssignment incentives_from_order(const Instance& inst, const std::vector<int>& pi) {
  require_permutation(inst, pi);
  const auto back = back_degrees(inst.graph, pi);
  IncentiveAssignment a;
  a.iota.assign(inst.size(), 0);
  a.ordering = pi;
  a.cost = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const int extra = back[i] - inst.kappa[pi[i]];
    if (extra > 0) {
      a.iota[pi[i]] = extra;
      a.cost += inst.c[pi[i]] * extra;
    }
  }
  return a;
}

PermutationCounts permutation_back_degree_counts(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("permutation enumeration requires n <= 8");
  PermutationCounts counts;
  counts.n = n;
  counts.total = 1;
  for (int i = 2; i <= n; ++i) counts.total *= i;
  counts.by_degree.resize(n);
  for (int u = 0; u < n; ++u) counts.by_degree[u].assign(g.degree(u) + 1, 0);
  if (n == 0) return counts;

  std::vector<std::uint64_t> masks(n);
  for (int u = 0; u < n; ++u) masks[u] = g.neighbor_mask(u);
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    std::uint64_t earlier = 0;
    for (int i = 0; i < n; ++i) {
      const int u = pi[i];
      ++counts.by_degree[u][static_cast<std::size_t>(__builtin_popcountll(masks[u] & earlier))];
      earlier |= std::uint64_t{1} << u;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return counts;
}

Rational expected_set_weight(const PermutationCounts& counts, const Instance& inst) {
  Rational sum = 0;
  for (int u = 0; u < inst.size(); ++u) {
    std::uint64_t selected = 0;
    const int cap = std::min<int>(inst.kappa[u], inst.graph.degree(u));
    for (int l = 0; l <= cap; ++l) selected += counts.by_degree[u][l];
    sum += inst.c[u] * selected;
  }
  return sum / counts.total;
}

Rational expected_incentive_cost(const PermutationCounts& counts, const Instance& inst) {
  Rational sum = 0;
  for (int u = 0; u < inst.size(); ++u) {
    std::uint64_t charged = 0;
    for (int l = inst.kappa[u] + 1; l <= inst.graph.degree(u); ++l)
      charged += counts.by_degree[u][l] * static_cast<std::uint64_t>(l - inst.kappa[u]);
    if (charged) sum += inst.c[u] * charged;
  }
  return sum / counts.total;
}

Rational expectation_by_enumeration(const Instance& inst, Objective which) {
  const auto counts = permutation_back_degree_counts(inst.graph);
  return which == Objective::DegenerateSet ? expected_set_weight(counts, inst)
                                           : expected_incentive_cost(counts, inst);
}

MonteCarloResult monte_carlo_estimate(const Instance& inst, Objective which,
                                      std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  Rng rng(seed);
  MonteCarloResult res;
  res.samples = samples;
  Rational sum = 0;
  bool have_best = false;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto pi = rng.random_permutation(inst.size());
    if (which == Objective::DegenerateSet) {
      auto w = select_degenerate_from_order(inst, pi);
      Rational value = 0;
      for (int u : w.order) value += inst.c[u];
      sum += value;
      if (!have_best || value > res.best_value) {
        res.best_value = value;
        res.best_set = std::move(w);
        have_best = true;
      }
    } else {
      auto a = incentives_from_order(inst, pi);
      sum += a.cost;
      if (!have_best || a.cost < res.best_value) {
        res.best_value = a.cost;
        res.best_incentives = std::move(a);
        have_best = true;
      }
    }
  }
  res.mean_exact = sum / samples;
  res.mean = rational_to_double(res.mean_exact);
  return res;
}

namespace {

ReducedInstance build_reduction(const Instance& inst, int pivot,
                                const std::vector<int>& removed_neighbors,
                                bool drop_neighbors) {
  const int n = inst.size();
  std::vector<char> removed(n, 0);
  removed[pivot] = 1;
  if (drop_neighbors)
    for (int v : removed_neighbors) removed[v] = 1;

  ReducedInstance red;
  red.pivot = pivot;
  red.removed_neighbors = removed_neighbors;
  std::vector<int> new_index(n, -1);
  for (int u = 0; u < n; ++u)
    if (!removed[u]) {
      new_index[u] = static_cast<int>(red.index_map.size());
      red.index_map.push_back(u);
    }

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : inst.graph.edges())
    if (!removed[u] && !removed[v]) edges.emplace_back(new_index[u], new_index[v]);
  Graph sub(static_cast<int>(red.index_map.size()), edges);

  std::vector<Rational> c;
  std::vector<int> kappa;
  std::vector<char> decrement(n, 0);
  if (drop_neighbors) {
    for (int v : inst.graph.neighbors(pivot))
      if (!removed[v]) decrement[v] = 1;
  } else {
    for (int v : removed_neighbors) decrement[v] = 1;
  }
  for (int i = 0; i < sub.vertex_count(); ++i) {
    const int orig = red.index_map[i];
    c.push_back(inst.c[orig]);
    int k = inst.kappa[orig] - (decrement[orig] ? 1 : 0);
    // kappa may exceed the reduced degree once other neighbors are gone;
    // such slack never binds, so clamp to keep the instance valid.
    kappa.push_back(std::min(k, sub.degree(i)));
  }
  red.instance = make_instance(std::move(sub), std::move(c), std::move(kappa));
  return red;
}

}  // namespace

ReducedInstance reduce_initial(const Instance& inst, int u) {
  if (u < 0 || u >= inst.size()) throw std::invalid_argument("invalid vertex " + std::to_string(u));
  std::vector<int> nprime;
  for (int v : inst.graph.neighbors(u))
    if (inst.kappa[v] == 0) nprime.push_back(v);
  return build_reduction(inst, u, nprime, /*drop_neighbors=*/true);
}

ReducedInstance reduce_terminal(const Instance& inst, int u) {
  if (u < 0 || u >= inst.size()) throw std::invalid_argument("invalid vertex " + std::to_string(u));
  std::vector<int> nprime;
  for (int v : inst.graph.neighbors(u))
    if (inst.kappa[v] == inst.graph.degree(v)) nprime.push_back(v);
  return build_reduction(inst, u, nprime, /*drop_neighbors=*/false);
}

GreedySetResult greedy_degenerate_set(const Instance& inst) {
  GreedySetResult result;
  result.weight = 0;
  Instance cur = inst;
  std::vector<int> to_original(inst.size());
  std::iota(to_original.begin(), to_original.end(), 0);

  while (cur.size() > 0) {
    int best = 0;
    Rational best_slack = cur.c[0] - claim1_rhs(cur, 0);
    for (int u = 1; u < cur.size(); ++u) {
      Rational slack = cur.c[u] - claim1_rhs(cur, u);
      if (slack > best_slack) {
        best_slack = slack;
        best = u;
      }
    }
    if (best_slack < 0)
      throw std::logic_error("no pivot with nonnegative slack; averaging identity violated");
    result.witness.order.push_back(to_original[best]);
    result.weight += cur.c[best];
    auto red = reduce_initial(cur, best);
    std::vector<int> next_map(red.index_map.size());
    for (std::size_t i = 0; i < red.index_map.size(); ++i)
      next_map[i] = to_original[red.index_map[i]];
    cur = std::move(red.instance);
    to_original = std::move(next_map);
  }
  return result;
}

IncentiveAssignment greedy_incentives(const Instance& inst) {
  IncentiveAssignment a;
  a.iota.assign(inst.size(), 0);
  a.cost = 0;
  Instance cur = inst;
  std::vector<int> to_original(inst.size());
  std::iota(to_original.begin(), to_original.end(), 0);
  std::vector<int> selection;

  while (cur.size() > 0) {
    int best = 0;
    auto slack_at = [&](int u) {
      return cur.c[u] * (cur.graph.degree(u) - cur.kappa[u]) - claim1b_rhs(cur, u);
    };
    Rational best_slack = slack_at(0);
    for (int u = 1; u < cur.size(); ++u) {
      Rational slack = slack_at(u);
      if (slack < best_slack) {
        best_slack = slack;
        best = u;
      }
    }
    if (best_slack > 0)
      throw std::logic_error("no pivot with nonpositive slack; averaging identity violated");
    const int orig = to_original[best];
    // Charged against the original kappa; equals the current-degree minus
    // current-kappa because decrements only hit full-allowance vertices.
    const int iota = std::max(0, cur.graph.degree(best) - inst.kappa[orig]);
    a.iota[orig] = iota;
    if (iota > 0) a.cost += inst.c[orig] * iota;
    selection.push_back(orig);
    auto red = reduce_terminal(cur, best);
    std::vector<int> next_map(red.index_map.size());
    for (std::size_t i = 0; i < red.index_map.size(); ++i)
      next_map[i] = to_original[red.index_map[i]];
    cur = std::move(red.instance);
    to_original = std::move(next_map);
  }
  a.ordering.assign(selection.rbegin(), selection.rend());
  return a;
}

}  // namespace dgs
