#include <cmath>
#include <fstream>
#include <random>

#include "doctest.h"
#include "gnns/errors.hpp"
#include "gnns/graph.hpp"
#include "oracles.hpp"
#include "paths.hpp"

using namespace gnns;

TEST_CASE("single undirected edge") {
  Graph g = parse_graph("0 1\n", GraphFormat::kEdgeList, Directedness::kUndirected);
  CHECK(g.node_count() == 2);
  CHECK_FALSE(g.directed());
  CHECK(g.weight(0, 1) == 1.0);
  CHECK(g.weight(1, 0) == 1.0);
  CHECK(g.total_weight() == 2.0);

  NodeStrengths s = node_strengths(g);
  CHECK(s.out == std::vector<double>{1, 1});
  CHECK(s.in == std::vector<double>{1, 1});
  CHECK(s.total == 2.0);
}

TEST_CASE("duplicate directed lines accumulate") {
  Graph g = parse_graph("0 1 2\n0 1 2\n", GraphFormat::kEdgeList, Directedness::kDirected);
  CHECK(g.directed());
  CHECK(g.weight(0, 1) == 4.0);
  CHECK(g.weight(1, 0) == 0.0);
}

TEST_CASE("missing weight defaults to one, comments are skipped") {
  Graph g = parse_graph("# header\n% other comment\n\n0 1\n1 2 2.5\n", GraphFormat::kEdgeList);
  CHECK(g.weight(0, 1) == 1.0);
  CHECK(g.weight(2, 1) == 2.5);
  CHECK(g.total_weight() == doctest::Approx(7.0));
}

TEST_CASE("karate fixture") {
  Graph g = load_graph(testing_paths::data("karate.txt"), GraphFormat::kEdgeList);
  CHECK(g.node_count() == 34);
  CHECK(g.arcs().size() == 156);
  CHECK(g.total_weight() == 156.0);
  CHECK(g.node_labels().front() == "1");
  CHECK(g.node_labels().back() == "34");

  Graph p = load_graph(testing_paths::data("karate.net"), GraphFormat::kPajek);
  CHECK_FALSE(p.directed());
  CHECK(p.total_weight() == 156.0);
  CHECK(p.node_labels()[0] == "member 1");
  CHECK(std::equal(g.arcs().begin(), g.arcs().end(), p.arcs().begin(), p.arcs().end()));
}

TEST_CASE("directed strengths") {
  const std::vector<Edge> edges{{0, 1, 2}, {1, 0, 1}};
  NodeStrengths s = node_strengths(Graph::from_edges(2, edges, Directedness::kDirected));
  CHECK(s.out == std::vector<double>{2, 1});
  CHECK(s.in == std::vector<double>{1, 2});
  CHECK(s.total == 3.0);
}

TEST_CASE("triangle strengths") {
  const std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  NodeStrengths s = node_strengths(Graph::from_edges(3, edges, Directedness::kUndirected));
  CHECK(s.out == std::vector<double>{2, 2, 2});
  CHECK(s.in == std::vector<double>{2, 2, 2});
  CHECK(s.total == 6.0);
}

TEST_CASE("undirected self-loop counts twice on the diagonal") {
  const std::vector<Edge> edges{{0, 0, 1.5}, {0, 1, 1}};
  Graph g = Graph::from_edges(2, edges, Directedness::kUndirected);
  CHECK(g.weight(0, 0) == 3.0);
  CHECK(g.total_weight() == 5.0);
}

TEST_CASE("symmetrize sums opposing arcs") {
  const std::vector<Edge> edges{{0, 1, 3}, {1, 0, 1}};
  Graph s = symmetrize(Graph::from_edges(2, edges, Directedness::kDirected));
  CHECK_FALSE(s.directed());
  CHECK(s.weight(0, 1) == 4.0);
  CHECK(s.weight(1, 0) == 4.0);

  const std::vector<Edge> one{{0, 1, 1}};
  Graph u = Graph::from_edges(2, one, Directedness::kUndirected);
  Graph su = symmetrize(u);
  CHECK(su.weight(0, 1) == 2.0);
  CHECK(su.weight(1, 0) == 2.0);
}

TEST_CASE("symmetrize scales symmetric input by two") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_graph(8, 0.4, rng, true, trial % 2 == 0);
    Graph once = symmetrize(g);
    Graph twice = symmetrize(once);
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        CHECK(twice.weight(i, j) == doctest::Approx(2.0 * once.weight(i, j)).epsilon(1e-12));
        if (!g.directed()) {
          CHECK(twice.weight(i, j) == doctest::Approx(4.0 * g.weight(i, j)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("strength sums agree with the total") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const bool directed = trial % 2 == 0;
    Graph g = oracle::random_graph(3 + trial % 12, 0.3, rng, true, directed);
    NodeStrengths s = node_strengths(g);
    double out = 0, in = 0, arcs = 0;
    for (double v : s.out) out += v;
    for (double v : s.in) in += v;
    for (const Edge& e : g.arcs()) arcs += e.weight;
    CHECK(std::abs(out - s.total) <= 1e-9 * s.total);
    CHECK(std::abs(in - s.total) <= 1e-9 * s.total);
    CHECK(std::abs(arcs - s.total) <= 1e-9 * s.total);
    if (!directed) {
      for (const Edge& e : g.arcs()) CHECK(g.weight(e.target, e.source) == e.weight);
    }
  }
}

TEST_CASE("string identifiers follow first appearance") {
  Graph g = parse_graph("bob alice\nalice carol 2\n", GraphFormat::kEdgeList);
  CHECK(g.node_labels() == std::vector<std::string>{"bob", "alice", "carol"});
  CHECK(g.weight(1, 2) == 2.0);
}

TEST_CASE("integer identifiers follow numeric order") {
  Graph g = parse_graph("10 2\n2 7\n", GraphFormat::kEdgeList);
  CHECK(g.node_labels() == std::vector<std::string>{"2", "7", "10"});
  CHECK(g.weight(2, 0) == 1.0);
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(parse_graph("0 1 -1\n", GraphFormat::kEdgeList), DataError);
  CHECK_THROWS_AS(parse_graph("0\n", GraphFormat::kEdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("0 1 abc\n", GraphFormat::kEdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("0 1 2 3\n", GraphFormat::kEdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("# nothing\n", GraphFormat::kEdgeList), DataError);
  CHECK_THROWS_AS(parse_graph("0 1 0\n", GraphFormat::kEdgeList), DataError);
  try {
    parse_graph("0 1\n1 2 -4\n", GraphFormat::kEdgeList, std::nullopt, "g.txt");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt", GraphFormat::kEdgeList), DataError);
}

TEST_CASE("pajek sections decide directedness") {
  const std::string arcs = "*Vertices 3\n1 \"a\"\n2 \"b\"\n3 \"c\"\n*Arcs\n1 2 2\n*Edges\n2 3\n";
  Graph g = parse_graph(arcs, GraphFormat::kPajek);
  CHECK(g.directed());
  CHECK(g.weight(0, 1) == 2.0);
  CHECK(g.weight(1, 0) == 0.0);
  CHECK(g.weight(1, 2) == 1.0);
  CHECK(g.weight(2, 1) == 1.0);
  CHECK(g.node_labels() == std::vector<std::string>{"a", "b", "c"});

  Graph forced = parse_graph(arcs, GraphFormat::kPajek, Directedness::kUndirected);
  CHECK_FALSE(forced.directed());
  CHECK(forced.weight(1, 0) == 2.0);

  Graph list = parse_graph("*Vertices 3\n*Edgeslist\n1 2 3\n", GraphFormat::kPajek);
  CHECK(list.weight(0, 2) == 1.0);
  CHECK(list.weight(2, 0) == 1.0);
  CHECK(list.node_labels()[2] == "3");

  CHECK_THROWS_AS(parse_graph("*Vertices 2\n*Matrix\n0 1\n1 0\n", GraphFormat::kPajek),
                  DataError);
  CHECK_THROWS_AS(parse_graph("*Vertices 2\n*Edges\n1 3\n", GraphFormat::kPajek), DataError);
}

TEST_CASE("pajek round trip") {
  testing_paths::ScratchDir dir("graph");
  std::mt19937_64 rng(3);
  for (bool directed : {false, true}) {
    Graph g = oracle::random_graph(9, 0.35, rng, true, directed);
    std::vector<Edge> with_loop(g.arcs().begin(), g.arcs().end());
    with_loop.push_back({4, 4, 0.75});
    g = Graph::from_edges(9, with_loop, Directedness::kDirected);
    if (!directed) g = symmetrize(g);
    write_pajek(dir / "g.net", g);
    Graph back = load_graph(dir / "g.net", GraphFormat::kPajek);
    CHECK(back.directed() == g.directed());
    REQUIRE(back.arcs().size() == g.arcs().size());
    for (std::size_t k = 0; k < g.arcs().size(); ++k) {
      CHECK(back.arcs()[k].source == g.arcs()[k].source);
      CHECK(back.arcs()[k].target == g.arcs()[k].target);
      CHECK(back.arcs()[k].weight == doctest::Approx(g.arcs()[k].weight).epsilon(1e-15));
    }
  }
}

TEST_CASE("format names") {
  CHECK(parse_graph_format("edgelist") == GraphFormat::kEdgeList);
  CHECK(parse_graph_format("pajek") == GraphFormat::kPajek);
  CHECK_THROWS_AS(parse_graph_format("gml"), ConfigError);
}

TEST_CASE("aggregate sums layers on one node space") {
  const std::vector<Edge> a{{0, 1, 1}};
  const std::vector<Edge> b{{0, 1, 2}, {1, 2, 1}};
  std::vector<Graph> layers{Graph::from_edges(3, a, Directedness::kUndirected),
                            Graph::from_edges(3, b, Directedness::kUndirected)};
  Graph sum = aggregate(layers);
  CHECK_FALSE(sum.directed());
  CHECK(sum.weight(0, 1) == 3.0);
  CHECK(sum.weight(2, 1) == 1.0);
  CHECK(sum.total_weight() == 8.0);

  layers.push_back(Graph::from_edges(4, a, Directedness::kUndirected));
  CHECK_THROWS_AS(aggregate(layers), DataError);
}

TEST_CASE("construction rejects bad arcs") {
  const std::vector<Edge> out_of_range{{0, 5, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, out_of_range, Directedness::kDirected), DataError);
  const std::vector<Edge> negative{{0, 1, -1}};
  CHECK_THROWS_AS(Graph::from_edges(3, negative, Directedness::kDirected), DataError);
  const std::vector<Edge> nan_weight{{0, 1, std::nan("")}};
  CHECK_THROWS_AS(Graph::from_edges(3, nan_weight, Directedness::kDirected), DataError);
  const std::vector<Edge> zero{{0, 1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, zero, Directedness::kDirected), DataError);
}
