#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "nullcert/ordering.hpp"

using namespace nullcert;

namespace {

ExponentVector ev(std::initializer_list<VarPower> f) { return ExponentVector(f); }

// Random proper coloring: shuffle the vertices and color greedily.
ProperColoring random_coloring(std::mt19937& rng, const Graph& g) {
  std::vector<Vertex> order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  ProperColoring c{std::vector<int>(static_cast<std::size_t>(g.num_vertices()) + 1, 0), 0};
  for (Vertex v : order) {
    int col = 1;
    for (bool clash = true; clash;) {
      clash = false;
      for (Vertex w : g.neighbors(v))
        if (c.color[w] == col) clash = true;
      if (clash) ++col;
    }
    c.color[v] = col;
    c.num_colors = std::max(c.num_colors, col);
  }
  return c;
}

bool closed_under_descendants(const Graph& g, const Subgraph& h) {
  for (Vertex v : h.vertices)
    for (Vertex w : g.neighbors(v))
      if (w > v && !h.contains(w)) return false;
  return true;
}

}  // namespace

TEST_CASE("greedy coloring") {
  const auto empty = greedy_coloring(Graph(4));
  CHECK(empty.num_colors == 1);
  for (Vertex v = 1; v <= 4; ++v) CHECK(empty.color[v] == 1);
  CHECK(greedy_coloring(Graph::complete(4)).num_colors == 4);
  const auto c5 = greedy_coloring(Graph::cycle(5));
  CHECK(is_proper(Graph::cycle(5), c5));
  CHECK(c5.num_colors <= 3);
  CHECK(greedy_coloring(Graph::cycle(5)).color == c5.color);

  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(rng, 15, 0.3);
    const auto c = greedy_coloring(g);
    CHECK(is_proper(g, c));
    CHECK(c.num_colors <= g.max_degree() + 1);
  }
}

TEST_CASE("ordering from a coloring") {
  // a-b-c as 1-2-3 with classes {1,3} and {2}.
  const Graph path(3, {{1, 2}, {2, 3}});
  const auto order = ordering_from_coloring(path, ProperColoring{{0, 1, 2, 1}, 2});
  CHECK(order.new_label(1) == 1);
  CHECK(order.new_label(3) == 2);
  CHECK(order.new_label(2) == 3);
  CHECK(order.old_label(3) == 2);

  const auto k3 = ordering_from_coloring(Graph::complete(3), ProperColoring{{0, 1, 2, 3}, 3});
  CHECK(k3 == VertexOrdering::identity(3));
  CHECK(longest_increasing_path(relabel(Graph::complete(3), k3)) == 2);

  const auto c5 = Graph::cycle(5);
  const auto relabeled = relabel(c5, greedy_ordering(c5));
  CHECK(oracle::longest_increasing_path(relabeled) <= 2);
  CHECK(relabeled.num_edges() == 5);

  CHECK_THROWS_AS(ordering_from_coloring(path, ProperColoring{{0, 1, 1, 2}, 2}), GraphError);
  CHECK_THROWS_AS(VertexOrdering::from_new_labels({0, 1, 1}), GraphError);
  CHECK_THROWS_AS(VertexOrdering::from_new_labels({0, 1, 3}), GraphError);
}

TEST_CASE("colour-class orderings bound increasing paths") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> nd(1, 12);
    const auto g = oracle::random_graph(rng, nd(rng), 0.35);
    const auto c = random_coloring(rng, g);
    const auto h = relabel(g, ordering_from_coloring(g, c));
    const int longest = oracle::longest_increasing_path(h);
    CHECK(longest <= c.num_colors - 1);
    CHECK(longest_increasing_path(h) == longest);
  }
}

TEST_CASE("descendant graphs") {
  const auto tree = oracle::tree10();
  const auto alpha = ev({{5, 2}, {6, 1}, {7, 1}, {8, 2}, {9, 1}});
  const auto h = descendant_graph(tree, alpha);
  CHECK(h.vertices == std::vector<Vertex>{5, 6, 7, 8, 9});
  CHECK(h.edges.empty());

  CHECK(descendant_graph(Graph::cycle(7), ExponentVector{}) == Subgraph{});
  CHECK(descendant_graph(Graph::complete(3), ev({{1, 1}})) == whole_graph(Graph::complete(3)));
  CHECK(descendant_graph(Graph::complete(3), ev({{2, 2}})).vertices == std::vector<Vertex>{2, 3});
}

TEST_CASE("essential graphs") {
  const auto tree = oracle::tree10();
  const auto alpha = ev({{5, 2}, {6, 1}, {7, 1}, {8, 2}, {9, 1}});
  CHECK(essential_graph(tree, alpha) == whole_graph(tree));
  CHECK(essential_graph(tree, ExponentVector{}) == Subgraph{});

  const auto k3 = essential_graph(Graph::complete(3), ev({{2, 1}, {3, 1}}));
  CHECK(k3.vertices == std::vector<Vertex>{2, 3});
  CHECK(k3.edges == std::vector<Edge>{{2, 3}});

  // Leaves 5 and 6 share the parent 2; merging pulls in 2 and its subtree only.
  const auto siblings = essential_graph(tree, ev({{5, 1}, {6, 1}}));
  CHECK(siblings.vertices == std::vector<Vertex>{2, 5, 6});
}

TEST_CASE("descendant and essential graph properties") {
  std::mt19937 rng(9);
  for (int t = 0; t < 150; ++t) {
    const auto g = oracle::random_graph(rng, 10, 0.25);
    std::uniform_int_distribution<Vertex> pick(1, 10);
    std::uniform_int_distribution<int> ex(1, 2);
    std::vector<VarPower> f;
    for (int j = 0; j < 3; ++j) f.push_back({pick(rng), ex(rng)});
    std::sort(f.begin(), f.end(), [](auto& a, auto& b) { return a.vertex < b.vertex; });
    f.erase(std::unique(f.begin(), f.end(), [](auto& a, auto& b) { return a.vertex == b.vertex; }), f.end());
    const ExponentVector m(f);
    const auto d0 = descendant_graph(g, m);

    // Monotone in the support.
    std::vector<VarPower> superset = f;
    superset.push_back({pick(rng), 1});
    std::sort(superset.begin(), superset.end(), [](auto& a, auto& b) { return a.vertex < b.vertex; });
    superset.erase(std::unique(superset.begin(), superset.end(), [](auto& a, auto& b) { return a.vertex == b.vertex; }),
                   superset.end());
    const auto dsup = descendant_graph(g, ExponentVector(superset));
    for (Vertex v : d0.vertices) CHECK(dsup.contains(v));

    const auto e = essential_graph(g, m);
    for (Vertex v : d0.vertices) CHECK(e.contains(v));
    CHECK(closed_under_descendants(g, e));
    CHECK_FALSE(has_mergeable_components(g, e));
    CHECK(e == induced_subgraph(g, e.vertices));
  }
}

TEST_CASE("descendant graphs of low-degree monomials on odd cycles are forests") {
  for (int g = 3; g <= 41; g += 2) {
    const auto c = Graph::cycle(g);
    const auto h = relabel(c, greedy_ordering(c));
    CHECK(longest_increasing_path(h) <= 2);
    const double bound = g / 6.0 - 1.0;
    int max_deg = 0;
    while (max_deg + 1 < bound) ++max_deg;
    if (bound <= 0) continue;
    for (const auto& m : enumerate_monomials(h.vertices(), 3, std::min(max_deg, 3))) CHECK(is_forest(descendant_graph(h, m)));
  }
  const auto tree = oracle::tree10();
  const auto h = relabel(tree, greedy_ordering(tree));
  for (const auto& m : enumerate_monomials(h.vertices(), 3, 3)) CHECK(is_forest(descendant_graph(h, m)));
}

TEST_CASE("essential graphs of low-degree monomials on long odd cycles are forests") {
  // 2(d+k-1) < g/(2k) - 1 with k = 3 holds for d = 0 once g > 30.
  for (int g : {31, 33, 37, 41}) {
    const auto c = Graph::cycle(g);
    const auto h = relabel(c, greedy_ordering(c));
    for (const auto& m : enumerate_monomials(h.vertices(), 3, 2)) CHECK(is_forest(essential_graph(h, m)));
  }
}
