#pragma once

#include <vector>

#include "dgs/instance.hpp"

namespace dgs {

// Ordering certifying kappa-degeneracy: each vertex has at most kappa(u)
// neighbors among its predecessors in `order`.
struct DegenWitness {
  std::vector<int> order;
};

struct DegenCheck {
  bool degenerate = false;
  std::vector<int> order;  // witness, when degenerate
  std::vector<int> stuck;  // nonempty residual set, when not
};

// Peeling certifier: repeatedly removes a vertex whose residual neighbor
// count is within its capacity (lowest index first), then reverses the
// peel order. Complete: succeeds iff some valid ordering of S exists.
DegenCheck check_degenerate(const Instance& inst, const std::vector<int>& S);

// True iff `order` (a sequence of distinct vertices) certifies degeneracy
// under the given per-vertex capacities.
bool ordering_certifies(const Graph& g, const std::vector<int>& caps,
                        const std::vector<int>& order);

// tau(u) = d(u) - kappa(u).
std::vector<int> dual_threshold(const Instance& inst);

struct ActivationResult {
  std::vector<bool> active;
  int rounds = 0;
};

// Synchronous threshold activation: a vertex activates once at least tau(u)
// of its neighbors are active; seeds are active at round 0.
ActivationResult simulate_activation(const Graph& g, const std::vector<int>& tau,
                                     const std::vector<int>& seeds);

bool is_dynamic_monopoly(const Graph& g, const std::vector<int>& tau,
                         const std::vector<int>& seeds);

}  // namespace dgs
