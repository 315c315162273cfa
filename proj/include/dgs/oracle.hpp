#pragma once

#include "dgs/degeneracy.hpp"
#include "dgs/greedy.hpp"
#include "dgs/instance.hpp"

namespace dgs {

inline constexpr int kDefaultOracleCap = 20;

struct AlphaResult {
  Rational value;
  DegenWitness witness;
};

struct BetaResult {
  Rational value;
  IncentiveAssignment assignment;
};

// Maximum weight of a kappa-degenerate set, by subset enumeration in
// ascending bitmask order (first-found tie-break). Requires n <= cap.
AlphaResult exact_alpha(const Instance& inst, int cap = kDefaultOracleCap);

// Minimum incentive cost, by a subset DP over elimination orderings:
// B(S) = min over v in S of B(S\v) + c(v) * max{0, |N(v) cap S\v| - kappa(v)}.
BetaResult exact_beta(const Instance& inst, int cap = kDefaultOracleCap);

// True iff some maximum-weight witness can start at u, decided via the
// reduction equality alpha(G) = c(u) + alpha(reduce_initial(G, u)).
bool is_initial(const Instance& inst, int u, int cap = kDefaultOracleCap);

// True iff some optimal incentive ordering can end at u, decided via
// beta(G) = c(u)(d(u)-kappa(u)) + beta(reduce_terminal(G, u)).
bool is_terminal(const Instance& inst, int u, int cap = kDefaultOracleCap);

}  // namespace dgs
