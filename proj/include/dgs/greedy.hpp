#pragma once

#include <cstdint>
#include <vector>

#include "dgs/degeneracy.hpp"
#include "dgs/instance.hpp"
#include "dgs/rng.hpp"

namespace dgs {

enum class Objective { DegenerateSet, Incentives };

// Non-negative per-vertex increase iota making V(G) (kappa+iota)-degenerate,
// certified by `ordering`; cost = sum c(u) * iota(u).
struct IncentiveAssignment {
  std::vector<int> iota;
  std::vector<int> ordering;
  Rational cost;
};

// Vertices of pi whose neighbor count among all earlier pi-vertices stays
// within capacity, kept in pi-order. Always a valid witness.
DegenWitness select_degenerate_from_order(const Instance& inst, const std::vector<int>& pi);

// iota(u_i) = max{0, back-degree of u_i in pi - kappa(u_i)}.
IncentiveAssignment incentives_from_order(const Instance& inst, const std::vector<int>& pi);

// Exact average of the selected weight (resp. incentive cost) over all n!
// permutations. Requires n <= 8.
Rational expectation_by_enumeration(const Instance& inst, Objective which);

// One pass over all n! permutations of a graph, recording for each vertex
// how many permutations give it each possible back-degree. Lets many
// (c, kappa) profiles reuse a single enumeration. Requires n <= 8.
struct PermutationCounts {
  int n = 0;
  std::uint64_t total = 0;                            // n!
  std::vector<std::vector<std::uint64_t>> by_degree;  // [u][l], l <= d(u)
};
PermutationCounts permutation_back_degree_counts(const Graph& g);
Rational expected_set_weight(const PermutationCounts& counts, const Instance& inst);
Rational expected_incentive_cost(const PermutationCounts& counts, const Instance& inst);

struct MonteCarloResult {
  double mean = 0.0;
  Rational mean_exact;
  Rational best_value;              // max weight / min cost over the samples
  DegenWitness best_set;            // DegenerateSet objective
  IncentiveAssignment best_incentives;  // Incentives objective
  std::uint64_t samples = 0;
};

// Seeded sampling over uniform random orderings; identical seed gives
// identical output.
MonteCarloResult monte_carlo_estimate(const Instance& inst, Objective which,
                                      std::uint64_t samples, std::uint64_t seed);

struct ReducedInstance {
  Instance instance;            // on the surviving vertices, reindexed
  int pivot = -1;               // removed pivot (original index)
  std::vector<int> removed_neighbors;  // N' (original indices)
  std::vector<int> index_map;   // reduced index -> original index
};

// Pivot-removal step behind the degenerate-set greedy: deletes u and its
// zero-capacity neighbors, decrements kappa on surviving neighbors
// (clamped into the valid range).
ReducedInstance reduce_initial(const Instance& inst, int u);

// Pivot-removal step behind the incentive greedy: deletes only u,
// decrementing kappa on neighbors whose capacity equals their degree.
ReducedInstance reduce_terminal(const Instance& inst, int u);

struct GreedySetResult {
  DegenWitness witness;
  Rational weight;
};

// Deterministic greedy meeting the alpha lower bound: repeatedly picks the
// vertex maximizing c(u) - claim1_rhs(u) and reduces.
GreedySetResult greedy_degenerate_set(const Instance& inst);

// Deterministic greedy meeting the beta upper bound: repeatedly picks the
// vertex minimizing c(u)(d(u)-kappa(u)) - claim1b_rhs(u), charges it
// d(u)-kappa(u), and removes it; ordering is the reverse selection order.
IncentiveAssignment greedy_incentives(const Instance& inst);

}  // namespace dgs
