#include "doctest.h"
#include "edgekeep/connectivity.hpp"
#include "edgekeep/errors.hpp"
#include "support.hpp"

#include <random>

using namespace edgekeep;
using testing_support::to_graph;

namespace {

std::vector<std::vector<int>> sides_of(const std::vector<EdgeCut>& cuts) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cuts) out.push_back(c.side_a.ids());
  return out;
}

Graph random_graph(std::mt19937& rng, int n, unsigned percent) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 100 < percent) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

}  // namespace

TEST_CASE("edge connectivity of named graphs") {
  auto k5 = edge_connectivity(to_graph(5, oracle::complete(5)));
  CHECK(k5.value == 4);
  CHECK(k5.cut.side_a == VertexSet{0});
  CHECK(edge_connectivity(to_graph(6, oracle::cycle(6))).value == 2);

  // Frozen from the bipartition oracle over all 2^9 splits.
  CHECK(oracle::edge_connectivity(10, oracle::petersen()) == 3);
  CHECK(edge_connectivity(to_graph(10, oracle::petersen())).value == 3);

  CHECK_THROWS_AS(edge_connectivity(Graph::build(1, {})), precondition_error);
}

TEST_CASE("disconnected graphs have an empty cut") {
  Graph g = Graph::build(5, {{0, 3}, {1, 2}, {2, 4}});
  auto r = edge_connectivity(g);
  CHECK(r.value == 0);
  CHECK(r.cut.edges.empty());
  CHECK(r.cut.side_a == VertexSet{0, 3});
  CHECK(r.cut.side_b == VertexSet{1, 2, 4});
  CHECK(is_valid_cut(g, r.cut));
}

TEST_CASE("is_k_edge_connected and the trivial graph") {
  Graph k1 = Graph::build(1, {});
  CHECK(is_k_edge_connected(k1, 1));
  CHECK_FALSE(is_k_edge_connected(k1, 2));
  CHECK_FALSE(is_k_edge_connected(to_graph(6, oracle::cycle(6)), 3));
  CHECK(is_k_edge_connected(to_graph(6, oracle::cycle(6)), 2));
  CHECK_THROWS_AS(is_k_edge_connected(k1, 0), precondition_error);
}

TEST_CASE("local edge connectivity") {
  Graph k4 = to_graph(4, oracle::complete(4));
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      if (s != t) CHECK(local_edge_connectivity(k4, s, t) == 3);
  CHECK(local_edge_connectivity(to_graph(4, oracle::path(4)), 0, 3) == 1);
  CHECK(local_edge_connectivity(Graph::build(4, {{0, 1}, {2, 3}}), 0, 3) == 0);
  CHECK_THROWS_AS(local_edge_connectivity(k4, 2, 2), precondition_error);
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(to_graph(6, oracle::complete(6))) == 5);
  CHECK(vertex_connectivity(to_graph(6, oracle::cycle(6))) == 2);
  // Frozen from the subset oracle.
  CHECK(oracle::vertex_connectivity(6, oracle::complete_bipartite(3, 3)) == 3);
  CHECK(vertex_connectivity(to_graph(6, oracle::complete_bipartite(3, 3))) == 3);
  CHECK(vertex_connectivity(Graph::build(1, {})) == 0);
  CHECK(vertex_connectivity(to_graph(6, oracle::complete(6)), 2) == 2);

  CHECK_FALSE(min_vertex_cut(to_graph(5, oracle::complete(5))).has_value());
  auto sep = min_vertex_cut(to_graph(6, oracle::cycle(6)));
  REQUIRE(sep.has_value());
  CHECK(sep->size() == 2);
  CHECK_FALSE(is_connected(delete_vertices(to_graph(6, oracle::cycle(6)), *sep).graph));
}

TEST_CASE("minimum cut enumeration") {
  // P3 a-b-c: both bridges.
  auto p3 = enumerate_min_edge_cuts(to_graph(3, oracle::path(3)));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].edges == std::vector<Edge>{{0, 1}});
  CHECK(p3[1].edges == std::vector<Edge>{{1, 2}});

  Graph c4 = to_graph(4, oracle::cycle(4));
  auto c4_cuts = enumerate_min_edge_cuts(c4);
  CHECK(sides_of(c4_cuts) == oracle::min_cut_sides(4, oracle::cycle(4)));
  CHECK(c4_cuts.size() == 6);  // 4 singletons + 2 "opposite edge" splits
  for (const auto& c : c4_cuts) CHECK(c.value() == 2);

  auto k4_cuts = enumerate_min_edge_cuts(to_graph(4, oracle::complete(4)));
  CHECK(k4_cuts.size() == 4);
  CHECK(sides_of(k4_cuts) == oracle::min_cut_sides(4, oracle::complete(4)));

  CHECK_THROWS_AS(enumerate_min_edge_cuts(Graph::build(3, {{0, 1}})), precondition_error);
  CHECK_THROWS_AS(enumerate_min_edge_cuts(to_graph(17, oracle::cycle(17))), limit_error);
  CHECK(enumerate_min_edge_cuts(to_graph(17, oracle::cycle(17)), 17).size() == 136);
}

TEST_CASE("edge connectivity matches the bipartition oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n, 20 + static_cast<unsigned>(rng() % 70));
    auto list = testing_support::to_list(g);
    int expected = oracle::edge_connectivity(n, list);
    auto r = edge_connectivity(g);
    REQUIRE(r.value == expected);
    CHECK(edge_connectivity_value(g) == expected);
    CHECK(bipartition_edge_connectivity(g) == expected);
    CHECK(is_valid_cut(g, r.cut));
    CHECK(r.cut.value() == static_cast<std::size_t>(expected));

    // min over t of the local connectivity from a fixed root.
    int via_local = 1 << 30;
    for (int t = 1; t < n; ++t) via_local = std::min(via_local, local_edge_connectivity(g, 0, t));
    CHECK(via_local == expected);

    int kappa = vertex_connectivity(g);
    CHECK(kappa == oracle::vertex_connectivity(n, list));
    CHECK(kappa <= expected);
    CHECK(expected <= g.min_degree());

    if (expected > 0) {
      auto all = enumerate_min_edge_cuts(g);
      CHECK(sides_of(all) == oracle::min_cut_sides(n, list));
      // The returned cut is the lexicographically smallest minimum side.
      CHECK(r.cut.side_a == all.front().side_a);
      for (const auto& c : all) {
        CHECK(is_valid_cut(g, c));
        CHECK(induces_connected(g, c.side_a));
        CHECK(induces_connected(g, c.side_b));
      }
    }
  }
}

TEST_CASE("larger graphs: capped and uncapped values agree") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 20 + static_cast<int>(rng() % 30);
    Graph g = random_graph(rng, n, 30 + static_cast<unsigned>(rng() % 60));
    if (!is_connected(g)) continue;
    auto r = edge_connectivity(g);
    CHECK(is_valid_cut(g, r.cut));
    CHECK(edge_connectivity_value(g, r.value + 5) == r.value);
    CHECK(edge_connectivity_value(g, 1) == std::min(1, r.value));
    int kappa = vertex_connectivity(g);
    CHECK(kappa <= r.value);
    auto sep = min_vertex_cut(g);
    if (sep) {
      CHECK(sep->size() == static_cast<std::size_t>(kappa));
      CHECK_FALSE(is_connected(delete_vertices(g, *sep).graph));
    }
  }
}

TEST_CASE("connectivity report") {
  auto r = connectivity_report(to_graph(5, oracle::complete(5)));
  CHECK(r.n == 5);
  CHECK(r.edge_count == 10);
  CHECK(r.min_degree == 4);
  CHECK(r.edge_connectivity == 4);
  CHECK(r.vertex_connectivity == 4);
  CHECK_FALSE(connectivity_report(Graph::build(1, {})).edge_connectivity.has_value());
}
