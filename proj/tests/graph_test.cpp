#include "doctest.h"
#include "edgekeep/errors.hpp"
#include "edgekeep/graph.hpp"
#include "support.hpp"

#include <random>

using namespace edgekeep;
using testing_support::to_graph;

TEST_CASE("build deduplicates and rejects bad endpoints") {
  Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}, {2, 1}});
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.has_edge(2, 0));

  Graph empty = Graph::build(2, {});
  CHECK(empty.edge_count() == 0);
  CHECK(empty.min_degree() == 0);

  CHECK_THROWS_AS(Graph::build(3, {{0, 0}}), precondition_error);
  CHECK_THROWS_WITH_AS(Graph::build(3, {{0, 3}}), doctest::Contains("(0,3)"), precondition_error);
  CHECK_THROWS_AS(Graph::build(3, {{-1, 2}}), precondition_error);
}

TEST_CASE("induced subgraphs") {
  Graph k4 = to_graph(4, oracle::complete(4));
  auto sub = induced_subgraph(k4, {0, 2, 3});
  CHECK(sub.graph == to_graph(3, oracle::complete(3)));
  CHECK(sub.to_parent == std::vector<Vertex>{0, 2, 3});
  CHECK(sub.from_parent[1] == -1);
  CHECK(sub.from_parent[3] == 2);

  Graph c5 = to_graph(5, oracle::cycle(5));
  CHECK(induced_subgraph(c5, {1, 2, 3}).graph == to_graph(3, oracle::path(3)));

  Graph pet = to_graph(10, oracle::petersen());
  CHECK(induced_subgraph(pet, VertexSet::range(10)).graph == pet);

  CHECK_THROWS_AS(induced_subgraph(k4, {0, 4}), precondition_error);
}

TEST_CASE("delete_vertices") {
  CHECK(delete_vertices(to_graph(5, oracle::complete(5)), {1, 3}).graph == to_graph(3, oracle::complete(3)));
  // C6 minus vertex 0 is the path 1-2-3-4-5.
  CHECK(delete_vertices(to_graph(6, oracle::cycle(6)), {0}).graph == to_graph(5, oracle::path(5)));
  Graph star = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto leaves = delete_vertices(star, {0});
  CHECK(leaves.graph.order() == 4);
  CHECK(leaves.graph.edge_count() == 0);

  CHECK_THROWS_AS(delete_vertices(star, VertexSet::range(5)), precondition_error);
  CHECK(delete_vertices(star, VertexSet::range(5), true).graph.order() == 0);

  auto same = delete_vertices(star, {});
  CHECK(same.graph == star);
  CHECK(same.to_parent == VertexSet::range(5).ids());
}

TEST_CASE("boundary_edge_count") {
  Graph k4 = to_graph(4, oracle::complete(4));
  CHECK(boundary_edge_count(k4, {0, 1}, {2, 3}) == 4);
  Graph c6 = to_graph(6, oracle::cycle(6));
  CHECK(boundary_edge_count(c6, {0, 1, 2}, {3, 4, 5}) == 2);
  CHECK(boundary_edge_count(c6, {}, {3, 4, 5}) == 0);
  CHECK_THROWS_AS(boundary_edge_count(c6, {0, 1}, {1, 2}), precondition_error);
}

TEST_CASE("components") {
  Graph g = Graph::build(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  auto parts = components(g);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet{0, 1, 2});
  CHECK(parts[1] == VertexSet{3, 4});
  CHECK(components(to_graph(6, oracle::cycle(6))).size() == 1);
  CHECK(components(Graph::build(4, {})).size() == 4);
}

TEST_CASE("graph invariants on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    Graph g = Graph::build(n, edges);

    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      degree_sum += static_cast<std::size_t>(g.degree(v));
      for (Vertex w : g.neighbors(v)) CHECK(g.has_edge(w, v));
    }
    CHECK(degree_sum == 2 * g.edge_count());

    // Nested induced subgraphs compose.
    std::vector<Vertex> s_ids, t_ids;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) {
        s_ids.push_back(v);
        if (rng() % 2) t_ids.push_back(v);
      }
    VertexSet s(s_ids), t(t_ids);
    auto outer = induced_subgraph(g, s);
    std::vector<Vertex> t_inner;
    for (Vertex v : t) t_inner.push_back(outer.from_parent[static_cast<std::size_t>(v)]);
    auto nested = induced_subgraph(outer.graph, VertexSet(t_inner));
    auto direct = induced_subgraph(g, t);
    CHECK(nested.graph == direct.graph);
    for (std::size_t i = 0; i < t.size(); ++i)
      CHECK(outer.parent_of(nested.parent_of(static_cast<Vertex>(i))) == direct.parent_of(static_cast<Vertex>(i)));

    // d_G is symmetric on disjoint sets.
    VertexSet rest = complement_of(g, s);
    CHECK(boundary_edge_count(g, s, rest) == boundary_edge_count(g, rest, s));
  }
}
