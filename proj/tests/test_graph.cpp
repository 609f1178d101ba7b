#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qgc/errors.hpp"
#include "qgc/graph.hpp"

using namespace qgc;

namespace {

oracle::Edges edges_of(const Graph& g) {
  oracle::Edges out;
  for (const auto& e : g.edges()) out.push_back({static_cast<int>(e.u), static_cast<int>(e.v)});
  return out;
}

Graph from_edges(int n, const oracle::Edges& es) {
  std::vector<Edge> edges;
  for (auto [u, v] : es) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace

TEST_CASE("graph construction normalizes and rejects bad input") {
  const Graph g(3, {{2, 1}, {0, 1}});
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{1, 2});
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edge_index(2, 1) == 1);
  CHECK(g.edge_index(0, 2) == 2);

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
}

TEST_CASE("random connected graphs") {
  SUBCASE("K2 is forced") {
    for (std::uint64_t s = 0; s < 5; ++s) CHECK(generate_random_connected(2, 0.5, s) == Graph::complete(2));
  }
  SUBCASE("edge count formula and determinism") {
    const Graph a = generate_random_connected(4, 0.5, 11);
    CHECK(a.edge_count() == 3);
    CHECK(a == generate_random_connected(4, 0.5, 11));
    CHECK(target_edge_count(10, 0.2) == 9);
    CHECK(target_edge_count(10, 0.5) == 23);  // 22.5 rounds up
    CHECK(target_edge_count(5, 1.0) == 10);
  }
  SUBCASE("n < 2 rejected") {
    CHECK_THROWS_AS(generate_random_connected(1, 0.5, 0), Error);
  }
  SUBCASE("1000 seeded draws are connected") {
    const double densities[] = {0.2, 0.5, 0.8};
    std::size_t draws = 0;
    for (std::size_t n = 4; n <= 20; ++n)
      for (double d : densities)
        for (std::uint64_t s = 0; s < 20 && draws < 1000; ++s, ++draws) {
          const Graph g = generate_random_connected(n, d, s * 7919 + n);
          REQUIRE(oracle::connected(static_cast<int>(n), edges_of(g)));
          CHECK(g.edge_count() == target_edge_count(n, d));
        }
    CHECK(draws == 1000);
  }
}

TEST_CASE("Brooks bound") {
  CHECK(brooks_upper_bound(Graph::complete(4)) == 4);
  CHECK(brooks_upper_bound(Graph::cycle(5)) == 3);
  CHECK(brooks_upper_bound(Graph::path(3)) == 2);
  CHECK(brooks_upper_bound(Graph::cycle(6)) == 2);
  for (std::size_t n = 2; n <= 6; ++n) {
    const Graph k = Graph::complete(n);
    CHECK(brooks_upper_bound(k) == k.max_degree() + 1);
  }
  for (std::size_t n : {3, 5, 7}) {
    const Graph c = Graph::cycle(n);
    CHECK(brooks_upper_bound(c) == c.max_degree() + 1);
  }
  CHECK_THROWS_AS(brooks_upper_bound(Graph::edgeless(3)), Error);
  CHECK(brooks_upper_bound(Graph::edgeless(1)) == 1);
}

TEST_CASE("exact chromatic number") {
  CHECK(chromatic_number_exact(Graph::complete(4)) == 4);
  CHECK(chromatic_number_exact(Graph::path(3)) == 2);
  CHECK(chromatic_number_exact(Graph::cycle(5)) == 3);
  CHECK(chromatic_number_exact(Graph::edgeless(3)) == 1);
  CHECK_THROWS_AS(chromatic_number_exact(Graph::complete(kExactChromaticLimit + 1)), Error);

  const Coloring c5 = optimal_coloring(Graph::cycle(5));
  CHECK(c5.proper(Graph::cycle(5)));
  CHECK(c5.distinct_labels() == 3);
}

TEST_CASE("chromatic <= greedy and chromatic <= Brooks on random graphs up to n=8") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const double d = static_cast<double>(1 + rng() % 100) / 100.0;
    const Graph g = generate_random_connected(n, d, rng());
    const std::size_t chi = chromatic_number_exact(g);
    CHECK(chi == static_cast<std::size_t>(oracle::chromatic_number(static_cast<int>(n), edges_of(g))));
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Coloring greedy = greedy_coloring(g, order);
    CHECK(greedy.proper(g));
    CHECK(chi <= greedy.distinct_labels());
    CHECK(greedy.distinct_labels() <= g.max_degree() + 1);
    CHECK(chi <= brooks_upper_bound(g));
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& es : oracle::connected_graphs(n)) {
      const Graph g = from_edges(n, es);
      CHECK(chromatic_number_exact(g) == static_cast<std::size_t>(oracle::chromatic_number(n, es)));
      CHECK(chromatic_number_exact(g) <= brooks_upper_bound(g));
    }
}

TEST_CASE("greedy coloring") {
  const std::vector<Vertex> order{0, 1, 2};
  CHECK(greedy_coloring(Graph::complete(3), order).labels == std::vector<Label>{0, 1, 2});
  CHECK(greedy_coloring(Graph::path(3), order).labels == std::vector<Label>{0, 1, 0});
  CHECK(greedy_coloring(Graph::edgeless(3), order).labels == std::vector<Label>{0, 0, 0});
  const std::vector<Vertex> bad{0, 0, 1};
  CHECK_THROWS_AS(greedy_coloring(Graph::path(3), bad), Error);
}

TEST_CASE("graph formats") {
  const Graph k3 = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::Dimacs);
  CHECK(k3 == Graph::complete(3));
  CHECK(parse_graph("c comment\np edge 2 1\ne 1 2\n", GraphFormat::Dimacs) == Graph::complete(2));
  CHECK(serialize_graph(Graph::complete(2), GraphFormat::Json) == "{\"n\":2,\"edges\":[[0,1]]}");
  const Graph c5 = Graph::cycle(5);
  CHECK(parse_graph(serialize_graph(c5, GraphFormat::Json), GraphFormat::Json) == c5);
  CHECK(parse_graph(serialize_graph(c5, GraphFormat::Dimacs), GraphFormat::Dimacs) == c5);
  CHECK(sniff_graph_format("  {\"n\":1}") == GraphFormat::Json);
  CHECK(sniff_graph_format("p edge 1 0") == GraphFormat::Dimacs);

  CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n", GraphFormat::Dimacs), Error);
  CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::Dimacs), Error);
  CHECK_THROWS_AS(parse_graph("{\"n\":2,\"edges\":[[0]]}", GraphFormat::Json), Error);
  CHECK_THROWS_AS(parse_graph("not json", GraphFormat::Json), Error);

  CHECK(graph_digest(c5) == graph_digest(Graph::cycle(5)));
  CHECK(graph_digest(c5) != graph_digest(Graph::path(5)));
  CHECK(graph_digest(c5).size() == 16);
}

TEST_CASE("isomorphism classes of small connected graphs") {
  CHECK(oracle::connected_graphs(2).size() == 1);
  CHECK(oracle::connected_graphs(3).size() == 2);
  CHECK(oracle::connected_graphs(4).size() == 6);
  CHECK(oracle::connected_graphs(5).size() == 21);
}
