#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "edgekeep/graph.hpp"

namespace edgekeep {

// Size bound for routines that enumerate every bipartition.
inline constexpr int default_exhaustive_limit = 16;

// An edge set whose removal separates side_a from side_b. The sides
// partition the vertex set of the host the cut was computed on.
struct EdgeCut {
  std::vector<Edge> edges;  // sorted
  VertexSet side_a;
  VertexSet side_b;

  std::size_t value() const { return edges.size(); }

  friend bool operator==(const EdgeCut&, const EdgeCut&) = default;
};

// The cut induced by a vertex set: side_a = side, side_b = V(G) \ side.
EdgeCut cut_from_side(const Graph& g, const VertexSet& side);

// Checks the EdgeCut invariants against the host: the sides partition V(G),
// both are nonempty, every listed edge crosses, every crossing edge is
// listed, and deleting the edges leaves no side_a to side_b path.
bool is_valid_cut(const Graph& g, const EdgeCut& cut);

struct EdgeConnectivity {
  int value = 0;
  EdgeCut cut;
};

// κ'(G) with a minimum cut. Among minimum cuts the lexicographically
// smallest side_a is returned; for a disconnected graph the cut is empty and
// side_a is the component of vertex 0. Requires n >= 2.
EdgeConnectivity edge_connectivity(const Graph& g);

// min(κ'(G), cap) without extracting a cut. Requires n >= 2.
int edge_connectivity_value(const Graph& g, int cap = INT_MAX);

// κ'(G) >= k, with the trivial graph counted as 1- but not 2-edge-connected.
bool is_k_edge_connected(const Graph& g, int k);

// Maximum number of pairwise edge-disjoint s-t paths.
int local_edge_connectivity(const Graph& g, Vertex s, Vertex t);

// min(κ(G), cap). κ(K_n) = n - 1; the trivial graph and disconnected graphs
// have κ = 0.
int vertex_connectivity(const Graph& g, int cap = INT_MAX);

// A minimum vertex cut, or nullopt when G is complete (no separating set
// exists). Disconnected graphs yield the empty set.
std::optional<VertexSet> min_vertex_cut(const Graph& g);

// Every bipartition (S, V \ S) with both sides connected and
// d(S, V \ S) = κ'(G), side_a holding vertex 0, sorted by side_a.
// Requires a connected graph with 2 <= n <= max_vertices.
std::vector<EdgeCut> enumerate_min_edge_cuts(const Graph& g, int max_vertices = default_exhaustive_limit);

// κ'(G) as the minimum boundary over all bipartitions. Exponential; refuses
// graphs above max_vertices.
int bipartition_edge_connectivity(const Graph& g, int max_vertices = default_exhaustive_limit);

struct ConnectivityReport {
  int n = 0;
  std::size_t edge_count = 0;
  int min_degree = 0;
  std::optional<int> edge_connectivity;  // unset for graphs with fewer than two vertices
  int vertex_connectivity = 0;
};

ConnectivityReport connectivity_report(const Graph& g);

}  // namespace edgekeep
