#pragma once

// Slow reference implementations the unit tests compare against. Everything
// here is deliberately naive: permutations and subsets only, no pruning.

#include <algorithm>
#include <numeric>
#include <vector>

#include "dgs/graph.hpp"
#include "dgs/instance.hpp"
#include "dgs/rng.hpp"

namespace testutil {

// Does some ordering of S keep every vertex within capacity? Checked by
// trying every permutation of S.
inline bool brute_degenerate(const dgs::Instance& inst, std::vector<int> S) {
  std::sort(S.begin(), S.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < S.size() && ok; ++i) {
      int back = 0;
      for (std::size_t j = 0; j < i; ++j)
        if (inst.graph.has_edge(S[i], S[j])) ++back;
      ok = back <= inst.kappa[S[i]];
    }
    if (ok) return true;
  } while (std::next_permutation(S.begin(), S.end()));
  return false;
}

inline dgs::Rational brute_alpha(const dgs::Instance& inst) {
  const int n = inst.size();
  dgs::Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> S;
    for (int u = 0; u < n; ++u)
      if (mask & (std::uint64_t{1} << u)) S.push_back(u);
    if (!brute_degenerate(inst, S)) continue;
    dgs::Rational w = 0;
    for (int u : S) w += inst.c[u];
    if (w > best) best = w;
  }
  return best;
}

// Minimum over all n! orderings of the incentive cost the ordering induces.
inline dgs::Rational brute_beta(const dgs::Instance& inst) {
  const int n = inst.size();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  bool first = true;
  dgs::Rational best = 0;
  do {
    dgs::Rational cost = 0;
    for (int i = 0; i < n; ++i) {
      int back = 0;
      for (int j = 0; j < i; ++j)
        if (inst.graph.has_edge(pi[i], pi[j])) ++back;
      if (back > inst.kappa[pi[i]]) cost += inst.c[pi[i]] * (back - inst.kappa[pi[i]]);
    }
    if (first || cost < best) {
      best = cost;
      first = false;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

inline dgs::Rational weight_of(const dgs::Instance& inst, const std::vector<int>& set) {
  dgs::Rational w = 0;
  for (int u : set) w += inst.c[u];
  return w;
}

inline std::vector<dgs::Rational> random_weights(dgs::Rng& rng, int n) {
  std::vector<dgs::Rational> c(n);
  for (int u = 0; u < n; ++u)
    c[u] = dgs::Rational(1 + rng.next_below(9), 1 + rng.next_below(4));
  return c;
}

inline std::vector<int> random_capacities(dgs::Rng& rng, const dgs::Graph& g) {
  std::vector<int> kappa(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    kappa[u] = static_cast<int>(rng.next_below(g.degree(u) + 1));
  return kappa;
}

}  // namespace testutil
