#include <doctest.h>

#include <random>
#include <sstream>

#include "../oracles.hpp"
#include "nullcert/graph.hpp"
#include "nullcert/json_io.hpp"

using namespace nullcert;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

int parse_error_line(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("dimacs parsing") {
  const auto k3 = parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(k3.num_vertices() == 3);
  CHECK(k3.num_edges() == 3);
  CHECK(k3 == Graph::complete(3));

  const auto single = parse("c one edge\np edge 2 1\ne 1 2\n");
  CHECK(single.num_edges() == 1);

  const auto dup = parse("p edge 3 3\ne 1 2\ne 2 1\ne 3 2\n");
  CHECK(dup.num_edges() == 2);
  CHECK(dup.has_edge(2, 3));

  CHECK(parse_error_line("p edge 2 1\ne 1 1\n") == 2);
  CHECK(parse_error_line("c x\np edge 2 1\ne 1 3\n") == 3);
  CHECK(parse_error_line("p edge two 1\n") == 1);
  CHECK(parse_error_line("e 1 2\n") == 1);
  CHECK(parse_error_line("p edge 3 1\nx 1 2\n") == 2);
  CHECK(parse_error_line("p edge 3 1\ne 1\n") == 2);
  CHECK_THROWS_AS(read_dimacs_file("/nonexistent/graph.col"), std::runtime_error);
}

TEST_CASE("dimacs round trip") {
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto g = oracle::random_graph(rng, 9, 0.4);
    std::ostringstream out;
    write_dimacs(out, g);
    CHECK(parse(out.str()) == g);
  }
}

TEST_CASE("graph construction") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 2}}), GraphError);
  const Graph g(4, {{3, 1}, {1, 3}, {2, 4}});
  CHECK(g.num_edges() == 2);
  CHECK(g.edges().front() == Edge{1, 3});
  CHECK(g.vertices() == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(Graph::path(4).num_edges() == 3);
  CHECK(Graph::cycle(5).num_edges() == 5);
  CHECK(Graph::complete(5).num_edges() == 10);
  CHECK(Graph::complete(5).max_degree() == 4);
}

TEST_CASE("girth") {
  CHECK(girth(Graph::cycle(5)) == 5);
  CHECK(girth(Graph::complete(4)) == 3);
  CHECK_FALSE(girth(Graph::path(10)).has_value());
  CHECK_FALSE(girth(Graph(4)).has_value());
  CHECK(girth(oracle::tree10()) == std::nullopt);
  CHECK(girth(Graph::cycle(41)) == 41);

  std::mt19937 rng(2);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<int> nd(1, 10);
    std::uniform_real_distribution<double> pd(0.05, 0.5);
    const auto g = oracle::random_graph(rng, nd(rng), pd(rng));
    CHECK(girth(g) == oracle::girth(g));
  }
}

TEST_CASE("subgraphs and forests") {
  CHECK(is_forest(Subgraph::from_edges(std::vector<Edge>{{1, 2}})));
  CHECK_FALSE(is_forest(whole_graph(Graph::cycle(3))));
  CHECK(is_forest(Subgraph::from_edges(std::vector<Edge>{{1, 2}, {2, 3}, {4, 5}, {5, 6}})));
  CHECK(is_forest(Subgraph{}));

  const auto h = induced_subgraph(Graph::complete(4), std::vector<Vertex>{4, 1, 2});
  CHECK(h.vertices == std::vector<Vertex>{1, 2, 4});
  CHECK(h.edges.size() == 3);
  CHECK(h.contains(4));
  CHECK_FALSE(h.contains(3));

  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(rng, 8, 0.3);
    CHECK(is_forest(whole_graph(g)) == !oracle::girth(g).has_value());
  }
}

TEST_CASE("graph json") {
  const auto g = oracle::tree10();
  const auto j = graph_to_json(g);
  CHECK(j.at("n") == 10);
  CHECK(j.at("edges").size() == 9);
  CHECK(j.at("edges")[0] == Json::array({1, 2}));
  CHECK(graph_from_json(j) == g);
}
