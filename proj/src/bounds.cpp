#include "dgs/bounds.hpp"

namespace dgs {

namespace {

Rational alpha_term(const Instance& inst, int u) {
  return inst.c[u] * (inst.kappa[u] + 1) / (inst.graph.degree(u) + 1);
}

Rational beta_term(const Instance& inst, int u) {
  const int slack = inst.graph.degree(u) - inst.kappa[u];
  return inst.c[u] * slack * (slack + 1) / (2 * (inst.graph.degree(u) + 1));
}

}  // namespace

BoundReport bound_alpha(const Instance& inst) {
  BoundReport report;
  report.total = 0;
  report.per_vertex.reserve(inst.size());
  for (int u = 0; u < inst.size(); ++u) {
    report.per_vertex.push_back(alpha_term(inst, u));
    report.total += report.per_vertex.back();
  }
  return report;
}

BoundReport bound_beta(const Instance& inst) {
  BoundReport report;
  report.total = 0;
  report.per_vertex.reserve(inst.size());
  for (int u = 0; u < inst.size(); ++u) {
    report.per_vertex.push_back(beta_term(inst, u));
    report.total += report.per_vertex.back();
  }
  return report;
}

Rational claim1_rhs(const Instance& inst, int u) {
  Rational sum = alpha_term(inst, u);
  for (int v : inst.graph.neighbors(u)) {
    sum += alpha_term(inst, v);
    sum -= inst.c[v] * inst.kappa[v] / inst.graph.degree(v);
  }
  return sum;
}

Rational claim1b_rhs(const Instance& inst, int u) {
  Rational sum = beta_term(inst, u);
  for (int v : inst.graph.neighbors(u)) {
    const int slack = inst.graph.degree(v) - inst.kappa[v];
    sum += beta_term(inst, v);
    sum -= inst.c[v] * (slack - 1) * slack / (2 * inst.graph.degree(v));
  }
  return sum;
}

std::optional<Rational> potential_h1(const Instance& inst, int u) {
  const int d = inst.graph.degree(u);
  if (d == 0) return std::nullopt;
  return inst.c[u] * (d - inst.kappa[u]) / (d * (d + 1));
}

std::optional<Rational> potential_h2(const Instance& inst, int u) {
  const int d = inst.graph.degree(u);
  if (d == 0) return std::nullopt;
  return inst.c[u] * (d - inst.kappa[u]) * (d + inst.kappa[u] + 1) / (2 * d * (d + 1));
}

}  // namespace dgs
