#include <vector>

#include "doctest.h"
#include "test_util.hpp"

#include "dgs/degeneracy.hpp"
#include "dgs/instance.hpp"
#include "dgs/smallgraphs.hpp"

using namespace dgs;

TEST_CASE("degeneracy check on a path") {
  const auto inst = make_instance(path_graph(3));  // kappa = 0: independent sets
  auto yes = check_degenerate(inst, {0, 2});
  CHECK(yes.degenerate);
  CHECK(ordering_certifies(inst.graph, inst.kappa, yes.order));
  auto no = check_degenerate(inst, {0, 1});
  CHECK(!no.degenerate);
  CHECK(!no.stuck.empty());
}

TEST_CASE("witness order is a permutation of the queried set") {
  const auto inst = make_instance(complete_graph(4), {}, {1, 1, 1, 1});
  auto res = check_degenerate(inst, {0, 2});
  REQUIRE(res.degenerate);
  std::vector<int> sorted = res.order;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 2});
}

TEST_CASE("peeling is complete: agrees with trying every ordering") {
  Rng rng(31);
  for_each_labeled_graph(4, false, [&](const Graph& g) {
    const auto inst = make_instance(g, {}, testutil::random_capacities(rng, g));
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      std::vector<int> S;
      for (int u = 0; u < 4; ++u)
        if (mask & (1u << u)) S.push_back(u);
      const auto res = check_degenerate(inst, S);
      CHECK(res.degenerate == testutil::brute_degenerate(inst, S));
      if (res.degenerate) CHECK(ordering_certifies(g, inst.kappa, res.order));
    }
  });
}

TEST_CASE("degenerate sets are closed under subsets") {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_gnp(6, 0.5, rng);
    const auto inst = make_instance(g, {}, testutil::random_capacities(rng, g));
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      std::vector<int> S;
      for (int u = 0; u < 6; ++u)
        if (mask & (1u << u)) S.push_back(u);
      if (!check_degenerate(inst, S).degenerate) continue;
      // drop each element in turn
      for (std::size_t drop = 0; drop < S.size(); ++drop) {
        std::vector<int> T = S;
        T.erase(T.begin() + drop);
        CHECK(check_degenerate(inst, T).degenerate);
      }
    }
  }
}

TEST_CASE("thresholds are degree minus capacity") {
  const auto inst = make_instance(path_graph(3), {}, {0, 1, 0});
  CHECK(dual_threshold(inst) == std::vector<int>{1, 1, 1});
}

TEST_CASE("activation spreads through a clique") {
  const Graph g = complete_graph(3);
  const auto res = simulate_activation(g, {1, 1, 1}, {0});
  CHECK(res.active == std::vector<bool>{true, true, true});
  CHECK(res.rounds == 1);
  CHECK(is_dynamic_monopoly(g, {1, 1, 1}, {0}));
  CHECK(!is_dynamic_monopoly(g, {2, 2, 2}, {0}));
}

TEST_CASE("activation needs the threshold met") {
  const Graph g = star_graph(3);  // center 0
  // center activates once 2 leaves are active
  const auto res = simulate_activation(g, {2, 1, 1, 1}, {1, 2});
  CHECK(res.active[0]);
  CHECK(res.active[3]);  // leaf activates after the center
  CHECK(res.rounds == 2);
  const auto stalled = simulate_activation(g, {2, 1, 1, 1}, {1});
  CHECK(!stalled.active[0]);
}

TEST_CASE("activation is monotone in the seed set") {
  Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(6));
    const Graph g = random_gnp(n, 0.4, rng);
    std::vector<int> tau(n);
    for (int u = 0; u < n; ++u) tau[u] = static_cast<int>(rng.next_below(g.degree(u) + 1));
    std::vector<int> seeds, more;
    for (int u = 0; u < n; ++u) {
      if (rng.next_below(3) == 0) seeds.push_back(u);
      if (rng.next_below(3) == 0 || !seeds.empty() && seeds.back() == u) more.push_back(u);
    }
    for (int s : seeds)
      if (std::find(more.begin(), more.end(), s) == more.end()) more.push_back(s);
    const auto small = simulate_activation(g, tau, seeds);
    const auto big = simulate_activation(g, tau, more);
    for (int u = 0; u < n; ++u)
      if (small.active[u]) CHECK(big.active[u]);
  }
}

TEST_CASE("degenerate sets and dynamic monopolies are complementary") {
  Rng rng(34);
  for (int n = 2; n <= 4; ++n) {
    for_each_labeled_graph(n, false, [&](const Graph& g) {
      const auto inst = make_instance(g, {}, testutil::random_capacities(rng, g));
      const auto tau = dual_threshold(inst);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> S, complement;
        for (int u = 0; u < n; ++u)
          (mask & (std::uint64_t{1} << u) ? S : complement).push_back(u);
        CHECK(check_degenerate(inst, S).degenerate ==
              is_dynamic_monopoly(g, tau, complement));
      }
    });
  }
}
