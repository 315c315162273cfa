#include "doctest.h"
#include "test_util.hpp"

#include "dgs/bounds.hpp"
#include "dgs/instance.hpp"
#include "dgs/smallgraphs.hpp"

using namespace dgs;

TEST_CASE("alpha and beta bounds on a path") {
  const auto inst = make_instance(path_graph(3));
  const auto a = bound_alpha(inst);
  CHECK(a.total == Rational(4, 3));
  CHECK(a.per_vertex == std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 2)});
  const auto b = bound_beta(inst);
  CHECK(b.total == 2);
  CHECK(b.per_vertex == std::vector<Rational>{Rational(1, 2), 1, Rational(1, 2)});
}

TEST_CASE("alpha and beta bounds on cliques") {
  const auto k3 = make_instance(complete_graph(3));
  CHECK(bound_alpha(k3).total == 1);
  CHECK(bound_beta(k3).total == 3);

  const auto k4 = make_instance(complete_graph(4), {}, {1, 1, 1, 1});
  CHECK(bound_beta(k4).total == 3);
  CHECK(bound_alpha(k4).total == 2);
}

TEST_CASE("full capacity makes the bounds trivial") {
  const Graph g = petersen_graph();
  std::vector<int> kappa(10, 3);
  const auto inst = make_instance(g, {}, kappa);
  CHECK(bound_alpha(inst).total == 10);  // everything selectable
  CHECK(bound_beta(inst).total == 0);    // nothing to pay
}

TEST_CASE("selection pressure on a star") {
  const auto inst = make_instance(star_graph(3));
  CHECK(claim1_rhs(inst, 0) == Rational(7, 4));  // center
  CHECK(claim1_rhs(inst, 1) == Rational(3, 4));  // leaf
}

TEST_CASE("incentive pressure on a path with a relaxed center") {
  const auto inst = make_instance(path_graph(3), {}, {0, 1, 0});
  CHECK(claim1b_rhs(inst, 1) == Rational(4, 3));
}

TEST_CASE("selection pressure averages to the weight") {
  Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(8));
    Graph g = random_gnp(n, 0.5, rng);
    if (g.edge_count() == 0) continue;
    // claim1_rhs needs positive degrees; connect isolated vertices to 0
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int u = 1; u < n; ++u)
      if (g.degree(u) == 0) edges.emplace_back(0, u);
    g = Graph(n, edges);
    if (g.degree(0) == 0) continue;
    const auto inst =
        make_instance(g, testutil::random_weights(rng, n), testutil::random_capacities(rng, g));

    Rational sum1 = 0, sum2 = 0;
    for (int u = 0; u < n; ++u) {
      sum1 += claim1_rhs(inst, u) - inst.c[u];
      sum2 += claim1b_rhs(inst, u) -
              inst.c[u] * (inst.graph.degree(u) - inst.kappa[u]);
    }
    CHECK(sum1 == 0);
    CHECK(sum2 == 0);
  }
}

TEST_CASE("harmonic potentials") {
  const auto k4 = make_instance(complete_graph(4), {}, {1, 1, 1, 1});
  REQUIRE(potential_h1(k4, 0).has_value());
  CHECK(*potential_h1(k4, 0) == Rational(1, 6));
  CHECK(*potential_h2(k4, 0) == Rational(5, 12));

  const auto isolated = make_instance(Graph(2, {}));
  CHECK(!potential_h1(isolated, 0).has_value());
  CHECK(!potential_h2(isolated, 1).has_value());

  // full capacity zeroes both potentials
  const auto p3 = make_instance(path_graph(3), {}, {1, 2, 1});
  CHECK(*potential_h1(p3, 1) == 0);
  CHECK(*potential_h2(p3, 1) == 0);
}

TEST_CASE("per-vertex terms sum to the totals") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(10));
    const Graph g = random_gnp(n, 0.4, rng);
    const auto inst =
        make_instance(g, testutil::random_weights(rng, n), testutil::random_capacities(rng, g));
    for (const auto& report : {bound_alpha(inst), bound_beta(inst)}) {
      Rational sum = 0;
      for (const auto& t : report.per_vertex) sum += t;
      CHECK(sum == report.total);
      CHECK(report.per_vertex.size() == static_cast<std::size_t>(n));
    }
  }
}
