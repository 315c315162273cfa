#include <sstream>
#include <stdexcept>

#include "doctest.h"

#include "dgs/graph.hpp"
#include "dgs/graph_io.hpp"
#include "dgs/instance.hpp"
#include "dgs/rational.hpp"
#include "dgs/rng.hpp"
#include "dgs/smallgraphs.hpp"

using namespace dgs;

TEST_CASE("rational parsing and printing") {
  CHECK(rational_str(parse_rational("3/4")) == "3/4");
  CHECK(rational_str(parse_rational("-2/4")) == "-1/2");
  CHECK(rational_str(parse_rational("5")) == "5");
  CHECK(rational_str(parse_rational("6/3")) == "2");
  CHECK(parse_rational("1/2") + parse_rational("1/3") == parse_rational("5/6"));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(rational_to_double(parse_rational("1/2")) == doctest::Approx(0.5));
}

TEST_CASE("rational arithmetic agrees with cross-multiplication") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const long long a = static_cast<long long>(rng.next_below(2000)) - 1000;
    const long long b = 1 + static_cast<long long>(rng.next_below(50));
    const long long c = static_cast<long long>(rng.next_below(2000)) - 1000;
    const long long d = 1 + static_cast<long long>(rng.next_below(50));
    const Rational x(a, b), y(c, d);
    CHECK((x < y) == (a * d < c * b));
    CHECK((x == y) == (a * d == c * b));
    CHECK(x + y == Rational(a * d + c * b, b * d));
    CHECK(x * y == Rational(a * c, b * d));
  }
}

TEST_CASE("graph construction and validation") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(0) == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.neighbor_mask(0) == 0b1010);

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("components are sorted and complete") {
  Graph g(6, {{0, 1}, {3, 4}});
  const auto comps = g.components();
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2});
  CHECK(comps[2] == std::vector<int>{3, 4});
  CHECK(comps[3] == std::vector<int>{5});
}

TEST_CASE("edge list parsing") {
  const auto parsed = parse_edge_list("# a path\n3 2\n0 1\n1 2\n");
  CHECK(parsed.graph.vertex_count() == 3);
  CHECK(parsed.graph.edge_count() == 2);
  CHECK(parsed.duplicate_edges == 0);

  const auto dup = parse_edge_list("2 3\n0 1\n1 0\n0 1\n");
  CHECK(dup.graph.edge_count() == 1);
  CHECK(dup.duplicate_edges == 2);

  const auto blanks = parse_edge_list("\n# hi\n2 1\n\n0 1\n");
  CHECK(blanks.graph.edge_count() == 1);
}

TEST_CASE("edge list errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 zzz\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 7\n"),
                       doctest::Contains("out of range"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 1\n"),
                       doctest::Contains("self-loop"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n"),
                       doctest::Contains("unexpected end"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("# nothing\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 9\n"), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
  Graph g(5, {{0, 4}, {1, 2}, {2, 3}});
  const auto back = parse_edge_list(to_edge_list(g));
  CHECK(back.graph == g);
}

TEST_CASE("graph6 decoding of known words") {
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);

  const Graph empty3 = parse_graph6("B?");
  CHECK(empty3.vertex_count() == 3);
  CHECK(empty3.edge_count() == 0);

  const Graph k2 = parse_graph6("A_");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.has_edge(0, 1));

  const Graph one = parse_graph6("@");
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
}

TEST_CASE("graph6 encoding of known graphs") {
  CHECK(encode_graph6(complete_graph(3)) == "Bw");
  CHECK(encode_graph6(Graph(3, {})) == "B?");
  CHECK(encode_graph6(complete_graph(2)) == "A_");
  CHECK(encode_graph6(Graph(1, {})) == "@");
}

TEST_CASE("graph6 rejects malformed words") {
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);      // truncated
  CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);    // trailing
  CHECK_THROWS_AS(parse_graph6("B\x07"), std::invalid_argument);  // bad byte
}

TEST_CASE("graph6 round trip on random graphs") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(30));
    const Graph g = random_gnp(n, 0.35, rng);
    const Graph back = parse_graph6(encode_graph6(g));
    CHECK(back == g);
  }
}

TEST_CASE("profile files fill defaults") {
  std::istringstream in("# weights\n2 3/2 1\n0 4 0\n");
  const auto p = parse_profile_file(in, 4);
  CHECK(p.c == std::vector<Rational>{4, 1, Rational(3, 2), 1});
  CHECK(p.kappa == std::vector<int>{0, 0, 1, 0});

  std::istringstream bad("9 1 0\n");
  CHECK_THROWS_AS(parse_profile_file(bad, 4), std::invalid_argument);
}

TEST_CASE("instance validation") {
  Graph g = path_graph(3);
  const auto inst = make_instance(g);
  CHECK(inst.c == std::vector<Rational>{1, 1, 1});
  CHECK(inst.kappa == std::vector<int>{0, 0, 0});
  CHECK(inst.total_weight() == 3);

  CHECK_THROWS_WITH_AS(make_instance(g, {1, 0, 1}, {0, 0, 0}),
                       doctest::Contains("1"), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(g, {1, 1, 1}, {0, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_instance(g, {1, 1, 1}, {2, 0, 0}), std::invalid_argument);
  CHECK_NOTHROW(make_instance(g, {1, 1, 1}, {1, 2, 1}));
}

TEST_CASE("generators match their definitions") {
  const Graph k5 = complete_graph(5);
  CHECK(k5.edge_count() == 10);
  const Graph p4 = path_graph(4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.degree(0) == 1);
  CHECK(p4.degree(1) == 2);
  const Graph star = star_graph(4);
  CHECK(star.vertex_count() == 5);
  CHECK(star.degree(0) == 4);
  const Graph pet = petersen_graph();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  for (int u = 0; u < 10; ++u) CHECK(pet.degree(u) == 3);
}

TEST_CASE("labeled enumeration counts") {
  CHECK(labeled_graph_count(3) == 8);
  CHECK(labeled_graph_count(4) == 64);
  int connected3 = 0, all4 = 0;
  for_each_labeled_graph(3, true, [&](const Graph&) { ++connected3; });
  for_each_labeled_graph(4, false, [&](const Graph&) { ++all4; });
  CHECK(connected3 == 4);
  CHECK(all4 == 64);
  int connected5 = 0;
  for_each_labeled_graph(5, true, [&](const Graph&) { ++connected5; });
  CHECK(connected5 == 728);
}

TEST_CASE("rng reproducibility") {
  Rng a(123), b(123), c(124);
  const auto pa = a.random_permutation(20);
  const auto pb = b.random_permutation(20);
  CHECK(pa == pb);
  CHECK(pa != c.random_permutation(20));
  Rng d(5);
  for (int i = 0; i < 1000; ++i) CHECK(d.next_below(7) < 7);
  Rng e(9);
  CHECK(e.spawn(0).next() != e.spawn(1).next());
  CHECK(Rng(9).spawn(3).next() == Rng(9).spawn(3).next());
}
