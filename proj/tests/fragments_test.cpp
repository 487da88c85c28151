#include "doctest.h"
#include "edgekeep/errors.hpp"
#include "edgekeep/fragments.hpp"
#include "support.hpp"

#include <random>

using namespace edgekeep;
using testing_support::to_graph;

namespace {

// two_cliques_bridged(5,2): A = {0..4}, B = {5..9}, bridges 0-5 and 1-6.
Graph two_cliques() { return to_graph(10, oracle::two_cliques_bridged(5, 2)); }

// Brute-force minimum size of the descent family: every edge e inside the
// region whose host G - V(e) has κ' < k, every vertex subset of the host
// inside the region that is a fragment.
std::size_t family_min_size(int n, const oracle::EdgeList& edges, int k, std::uint32_t region) {
  std::size_t best = 1000;
  for (auto [a, b] : edges) {
    if (!(region >> a & 1u) || !(region >> b & 1u)) continue;
    std::uint32_t host = ((1u << n) - 1u) & ~(1u << a) & ~(1u << b);
    oracle::EdgeList host_edges;
    for (auto [u, v] : edges)
      if ((host >> u & 1u) && (host >> v & 1u)) host_edges.emplace_back(u, v);
    int lambda = 1 << 30;
    for (std::uint32_t s = host; s; s = (s - 1) & host)
      if (s != host) lambda = std::min(lambda, oracle::boundary(host_edges, s));
    if (lambda >= k) continue;
    for (std::uint32_t s = host & region; s; s = (s - 1) & (host & region)) {
      if (s == host || oracle::boundary(host_edges, s) != lambda) continue;
      if (!oracle::connected_within(n, host_edges, s)) continue;
      if (lambda > 0 && !oracle::connected_within(n, host_edges, host & ~s)) continue;
      best = std::min(best, static_cast<std::size_t>(std::popcount(s)));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("fragments of the bridged cliques") {
  Graph g = two_cliques();
  auto frags = fragments_of(g, {0, 1}, 2);
  REQUIRE(frags.size() == 2);
  CHECK(frags[0].side == VertexSet{2, 3, 4});
  CHECK(frags[0].complement == VertexSet{5, 6, 7, 8, 9});
  CHECK(frags[0].cut.edges.empty());
  CHECK(frags[1].side == VertexSet{5, 6, 7, 8, 9});

  // κ'(G - {0,1}) = 0 per the bipartition oracle on the 8-vertex host.
  oracle::EdgeList host;
  for (auto [u, v] : oracle::two_cliques_bridged(5, 2))
    if (u > 1 && v > 1) host.emplace_back(u - 2, v - 2);
  CHECK(oracle::edge_connectivity(8, host) == 0);
}

TEST_CASE("fragments_of returns nothing when the host keeps k") {
  Graph k5 = to_graph(5, oracle::complete(5));
  for (const Edge& e : k5.edges()) CHECK(fragments_of(k5, e, 2).empty());
  Graph c5 = to_graph(5, oracle::cycle(5));
  for (const Edge& e : c5.edges()) CHECK(fragments_of(c5, e, 1).empty());
  // At k = 2 the remaining P3 has two bridges, hence four fragments.
  CHECK(fragments_of(c5, {0, 1}, 2).size() == 4);

  CHECK_THROWS_AS(fragments_of(c5, {0, 2}, 1), precondition_error);
  CHECK_THROWS_AS(fragments_of(to_graph(3, oracle::complete(3)), {0, 1}, 1), precondition_error);
}

TEST_CASE("fragment validation") {
  Graph g = two_cliques();
  CHECK(is_fragment(g, {0, 1}, {2, 3, 4}));
  CHECK_FALSE(is_fragment(g, {0, 1}, {2, 3}));
  CHECK_FALSE(is_fragment(g, {0, 1}, {0, 2, 3, 4}));
  Fragment f = make_fragment(g, {0, 2}, {1, 3, 4});
  CHECK(f.cut.edges == std::vector<Edge>{{1, 6}});
  CHECK(f.host_edge_connectivity() == 1);
  CHECK_THROWS_AS(make_fragment(g, {0, 2}, {1, 3}), precondition_error);
}

TEST_CASE("semifragments") {
  // C6 with two opposite edges cut: two paths of three vertices.
  Graph c6 = to_graph(6, oracle::cycle(6));
  auto s = make_semifragment(c6, {}, {{0, 1}, {3, 4}}, {1, 2, 3});
  CHECK(s.side == VertexSet{1, 2, 3});
  CHECK_THROWS_AS(make_semifragment(c6, {}, {{0, 1}, {3, 4}}, {1, 2}), precondition_error);
  CHECK_THROWS_AS(make_semifragment(c6, {}, {{0, 1}}, {1, 2, 3}), precondition_error);
  // Cutting three edges leaves three components; two of them form a semifragment.
  auto t = make_semifragment(c6, {}, {{0, 1}, {2, 3}, {4, 5}}, {1, 2, 3, 4});
  CHECK(t.side.size() == 4);
  CHECK_THROWS_AS(make_semifragment(c6, {}, {{0, 1}, {2, 3}, {4, 5}}, VertexSet::range(6)), precondition_error);
}

TEST_CASE("lemma 2.1 hypotheses") {
  Graph g = two_cliques();
  auto f = all_fragments(g, {0, 1});
  auto f1 = all_fragments(g, {2, 3});
  // e and e1 share no endpoint, but F ∩ F1 is empty for this pair.
  Fragment side_b = make_fragment(g, {0, 1}, {5, 6, 7, 8, 9});
  for (const Fragment& x : f1) {
    if (x.side.intersects(side_b.side)) continue;
    CHECK(check_lemma21(g, {0, 1}, {2, 3}, side_b, x).verdict == Lemma21Verdict::hypotheses_unmet);
  }
  // Adjacent edges never satisfy the hypotheses.
  auto adj = all_fragments(g, {1, 2});
  for (const Fragment& a : f)
    for (const Fragment& b : adj) CHECK(check_lemma21(g, {0, 1}, {1, 2}, a, b).verdict == Lemma21Verdict::hypotheses_unmet);

  CHECK_THROWS_AS(check_lemma21(g, {0, 1}, {2, 3}, f1.front(), f.front()), precondition_error);
  CHECK_THROWS_AS(check_lemma21(g, {0, 7}, {2, 3}, f.front(), f1.front()), precondition_error);
}

TEST_CASE("lemma 2.1 on small labeled graphs") {
  // Five vertices are too few for the hypotheses; six is the first order
  // with configurations. The full six-vertex sweep is in the acceptance suite.
  Lemma21Tally five;
  auto pairs5 = oracle::all_pairs(5);
  for (std::uint32_t mask = 0; mask < (1u << pairs5.size()); ++mask) {
    Graph g = to_graph(5, oracle::from_mask(pairs5, mask));
    if (is_connected(g)) five += validate_lemma21(g);
  }
  CHECK(five.configurations == 0);

  Lemma21Tally total;
  auto pairs = oracle::all_pairs(6);
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); mask += 13) {
    Graph g = to_graph(6, oracle::from_mask(pairs, mask));
    if (is_connected(g)) total += validate_lemma21(g);
  }
  CHECK(total.configurations > 0);
  CHECK(total.alpha > 0);
  CHECK(total.beta > 0);
  CHECK(total.violations == 0);
  CHECK(total.equality_failures == 0);
  CHECK(total.min_cut_failures == 0);
}

TEST_CASE("lemma 2.1 on random graphs with seven to nine vertices") {
  std::mt19937 rng(5);
  Lemma21Tally total;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 7 + static_cast<int>(rng() % 3);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 45) edges.emplace_back(u, v);
    Graph g = Graph::build(n, edges);
    if (is_connected(g)) total += validate_lemma21(g);
  }
  CHECK(total.alpha > 0);
  CHECK(total.violations == 0);
  CHECK(total.equality_failures == 0);
}

TEST_CASE("minimal fragment descent on the bridged cliques") {
  Graph g = two_cliques();
  Fragment f0 = make_fragment(g, {0, 1}, {2, 3, 4});
  DescentResult r = minimal_fragment_descent(g, 2, {0, 1}, f0);
  CHECK(r.region == VertexSet{0, 1, 2, 3, 4});
  CHECK(r.f1.side.size() == 3);
  CHECK(r.f1.side.size() == family_min_size(10, oracle::two_cliques_bridged(5, 2), 2, 0b11111u));
  // Smallest side among the size-3 ties, then smallest edge.
  CHECK(r.f1.side == VertexSet{0, 2, 3});
  CHECK(r.e1 == Edge{1, 4});
  CHECK(r.f1.side.subset_of(r.region));

  auto family = fragment_family(g, 2, {0, 1}, f0);
  CHECK(family.size() == r.family_size);
  for (const auto& m : family) CHECK(m.fragment.side.size() >= r.f1.side.size());

  DescentConclusion c = verify_descent_conclusion(g, 2, r);
  CHECK(c.holds());
  CHECK(c.deficient_edges > 0);
  CHECK(c.fragment_min_degree >= 1);

  // The result is a fixed point of the descent.
  DescentResult again = minimal_fragment_descent(g, 2, r.e1, r.f1);
  CHECK(again.e1 == r.e1);
  CHECK(again.f1.side == r.f1.side);
}

TEST_CASE("descent preconditions") {
  Graph g = two_cliques();
  // G - {2,3} is still 2-edge-connected.
  auto frag_23 = all_fragments(g, {2, 3});
  REQUIRE_FALSE(frag_23.empty());
  CHECK_THROWS_AS(minimal_fragment_descent(g, 2, {2, 3}, frag_23.front()), precondition_error);
  Fragment f0 = make_fragment(g, {0, 1}, {2, 3, 4});
  CHECK_THROWS_AS(minimal_fragment_descent(g, 3, {0, 1}, f0), precondition_error);
  CHECK_THROWS_AS(minimal_fragment_descent(g, 2, {0, 2}, f0), precondition_error);
}

TEST_CASE("descent on random hosts is minimal and satisfies its conclusion") {
  std::mt19937 rng(17);
  int runs = 0;
  for (int trial = 0; trial < 400 && runs < 25; ++trial) {
    // Two dense blocks joined by k disjoint bridges.
    int k = 1 + static_cast<int>(rng() % 3);
    int a = 4 + static_cast<int>(rng() % 3);
    int n = a + 4 + static_cast<int>(rng() % 3);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((u < a) == (v < a) && rng() % 100 < 85) edges.emplace_back(u, v);
    for (int i = 0; i < k; ++i) edges.emplace_back(i, a + i);
    Graph g = Graph::build(n, edges);
    if (g.min_degree() < k + 2 || !is_k_edge_connected(g, k)) continue;
    for (const Edge& e0 : g.edges()) {
      auto frags = fragments_of(g, e0, k);
      if (frags.empty()) continue;
      ++runs;
      DescentResult r = minimal_fragment_descent(g, k, e0, frags.front());
      std::uint32_t region = 0;
      for (Vertex v : r.region) region |= 1u << v;
      CHECK(r.f1.side.size() == family_min_size(n, testing_support::to_list(g), k, region));
      DescentConclusion c = verify_descent_conclusion(g, k, r);
      CHECK(c.holds());
      CHECK(c.fragment_min_degree >= 1);
      auto bounds = fragment_degree_bounds(g, r.e1, r.f1, k);
      CHECK(bounds.all_hold());
      break;
    }
  }
  CHECK(runs > 0);
}

TEST_CASE("fragment degree bounds") {
  Graph g = two_cliques();
  Fragment f0 = make_fragment(g, {0, 1}, {2, 3, 4});
  DescentResult r = minimal_fragment_descent(g, 2, {0, 1}, f0);
  auto report = fragment_degree_bounds(g, r.e1, r.f1, 2);
  CHECK(report.fragment_size == 3);
  CHECK(report.required_across == 0);
  CHECK(report.all_hold());
  REQUIRE(report.vertices.size() == 3);
  // Vertex 0 keeps its bridge to 5; 2 and 3 see only A-vertices.
  CHECK(report.vertices[0].across == 1);
  CHECK(report.vertices[1].across == 0);
  CHECK(report.vertices[1].inside == 2);
  CHECK(report.vertices[1].inside_bound_holds);

  // A graph below the k + 2 degree threshold is rejected.
  Graph c6 = to_graph(6, oracle::cycle(6));
  auto frags = all_fragments(c6, {0, 1});
  REQUIRE_FALSE(frags.empty());
  CHECK_THROWS_AS(fragment_degree_bounds(c6, {0, 1}, frags.front(), 1), precondition_error);
}
