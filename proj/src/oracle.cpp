#include "dgs/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace dgs {

namespace {

void require_cap(const Instance& inst, int cap) {
  if (inst.size() > cap)
    throw std::invalid_argument("instance has " + std::to_string(inst.size()) +
                                " vertices, oracle cap is " + std::to_string(cap));
}

// degen[S] = 1 iff the subset S is kappa-degenerate, filled bottom-up:
// S is degenerate iff some v in S fits last (back-degree within capacity)
// with S \ {v} degenerate.
std::vector<char> degenerate_flags(const Instance& inst) {
  const int n = inst.size();
  std::vector<std::uint64_t> masks(n);
  for (int u = 0; u < n; ++u) masks[u] = inst.graph.neighbor_mask(u);
  std::vector<char> degen(std::size_t{1} << n, 0);
  degen[0] = 1;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      const std::uint64_t without = s & ~(std::uint64_t{1} << v);
      if (degen[without] &&
          __builtin_popcountll(masks[v] & without) <= inst.kappa[v]) {
        degen[s] = 1;
        break;
      }
    }
  }
  return degen;
}

}  // namespace

AlphaResult exact_alpha(const Instance& inst, int cap) {
  require_cap(inst, cap);
  const int n = inst.size();
  AlphaResult result;
  result.value = 0;
  if (n == 0) return result;

  const auto degen = degenerate_flags(inst);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  // Double weights prefilter the exact-rational comparison.
  std::vector<double> wd(full + 1, 0.0);
  std::vector<double> cd(n);
  for (int u = 0; u < n; ++u) cd[u] = rational_to_double(inst.c[u]);
  double best_wd = 0.0;
  for (std::uint64_t s = 1; s <= full; ++s) {
    wd[s] = wd[s & (s - 1)] + cd[__builtin_ctzll(s)];
    if (degen[s] && wd[s] > best_wd) best_wd = wd[s];
  }
  const double tol = 1e-9 * (1.0 + std::fabs(best_wd));

  Rational best = 0;
  std::uint64_t best_mask = 0;
  bool found = false;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (!degen[s] || wd[s] < best_wd - tol) continue;
    Rational w = 0;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) w += inst.c[__builtin_ctzll(rest)];
    if (!found || w > best) {
      best = w;
      best_mask = s;
      found = true;
    }
  }
  result.value = best;
  std::vector<int> set;
  for (std::uint64_t rest = best_mask; rest; rest &= rest - 1)
    set.push_back(__builtin_ctzll(rest));
  auto check = check_degenerate(inst, set);
  result.witness.order = std::move(check.order);
  return result;
}

BetaResult exact_beta(const Instance& inst, int cap) {
  require_cap(inst, cap);
  const int n = inst.size();
  BetaResult result;
  result.value = 0;
  result.assignment.iota.assign(n, 0);
  result.assignment.cost = 0;
  if (n == 0) return result;

  std::vector<std::uint64_t> masks(n);
  for (int u = 0; u < n; ++u) masks[u] = inst.graph.neighbor_mask(u);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Rational> table(full + 1);
  std::vector<std::int8_t> last(full + 1, -1);
  for (std::uint64_t s = 1; s <= full; ++s) {
    bool first = true;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      const std::uint64_t without = s & ~(std::uint64_t{1} << v);
      const int charge = __builtin_popcountll(masks[v] & without) - inst.kappa[v];
      Rational cand = table[without];
      if (charge > 0) cand += inst.c[v] * charge;
      if (first || cand < table[s]) {
        table[s] = std::move(cand);
        last[s] = static_cast<std::int8_t>(v);
        first = false;
      }
    }
  }

  result.value = table[full];
  std::vector<int> ordering(n);
  std::uint64_t s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    const int v = last[s];
    ordering[pos] = v;
    s &= ~(std::uint64_t{1} << v);
  }
  result.assignment.ordering = std::move(ordering);
  std::uint64_t earlier = 0;
  for (int v : result.assignment.ordering) {
    const int extra = __builtin_popcountll(masks[v] & earlier) - inst.kappa[v];
    if (extra > 0) {
      result.assignment.iota[v] = extra;
      result.assignment.cost += inst.c[v] * extra;
    }
    earlier |= std::uint64_t{1} << v;
  }
  return result;
}

bool is_initial(const Instance& inst, int u, int cap) {
  if (u < 0 || u >= inst.size()) throw std::invalid_argument("invalid vertex");
  const auto whole = exact_alpha(inst, cap);
  const auto red = reduce_initial(inst, u);
  return whole.value == inst.c[u] + exact_alpha(red.instance, cap).value;
}

bool is_terminal(const Instance& inst, int u, int cap) {
  if (u < 0 || u >= inst.size()) throw std::invalid_argument("invalid vertex");
  const auto whole = exact_beta(inst, cap);
  const auto red = reduce_terminal(inst, u);
  return whole.value == inst.c[u] * (inst.graph.degree(u) - inst.kappa[u]) +
                            exact_beta(red.instance, cap).value;
}

}  // namespace dgs
