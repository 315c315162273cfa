#pragma once

#include <optional>
#include <vector>

#include "dgs/instance.hpp"

namespace dgs {

struct BoundReport {
  Rational total;
  std::vector<Rational> per_vertex;
};

// Lower bound on the maximum weight of a kappa-degenerate set:
// per-vertex term c(u)(kappa(u)+1)/(d(u)+1).
BoundReport bound_alpha(const Instance& inst);

// Upper bound on the minimum incentive cost:
// per-vertex term c(u)(d(u)-kappa(u))(d(u)-kappa(u)+1)/(2(d(u)+1)).
BoundReport bound_beta(const Instance& inst);

// c(u)(k(u)+1)/(d(u)+1) + sum over v in N(u) of
//   [c(v)(k(v)+1)/(d(v)+1) - c(v)k(v)/d(v)].
// Averages to c(u) over V: sum_u (claim1_rhs(u) - c(u)) = 0.
Rational claim1_rhs(const Instance& inst, int u);

// The incentive-side analogue; averages to c(u)(d(u)-kappa(u)).
Rational claim1b_rhs(const Instance& inst, int u);

// Harmonic potentials; undefined (nullopt) for isolated vertices.
std::optional<Rational> potential_h1(const Instance& inst, int u);
std::optional<Rational> potential_h2(const Instance& inst, int u);

}  // namespace dgs
