#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace edgekeep {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const { return touches(o.u) || touches(o.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

// Sorted, duplicate-free set of vertex ids. Ordering is lexicographic on
// the sorted id list, which is the tie-break order used everywhere.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(Vertex n);  // {0, ..., n-1}

  bool contains(Vertex v) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  Vertex front() const { return ids_.front(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  VertexSet unite(const VertexSet& o) const;
  VertexSet intersect(const VertexSet& o) const;
  VertexSet minus(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  bool subset_of(const VertexSet& o) const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Throws precondition_error on an out-of-range endpoint or a self-loop.
  // Duplicate edges (in either orientation) are merged.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  bool valid_vertex(Vertex v) const { return v >= 0 && v < order(); }

  // 0 for the null graph.
  int min_degree() const;

  // Sorted by (u, v).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

// An induced subgraph plus the explicit correspondence with its parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // subgraph id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> subgraph id, or -1

  Vertex parent_of(Vertex v) const { return to_parent[static_cast<std::size_t>(v)]; }
  VertexSet lift(const VertexSet& s) const;
  Edge lift(const Edge& e) const { return {parent_of(e.u), parent_of(e.v)}; }
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// G - S. Throws precondition_error when S = V(G) unless allow_empty is set.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s, bool allow_empty = false);

// d_G(V1, V2): edges with one end in V1 and the other in V2. The sets must be
// disjoint.
std::size_t boundary_edge_count(const Graph& g, const VertexSet& v1, const VertexSet& v2);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

// Is G[s] connected? The empty set is reported as not connected.
bool induces_connected(const Graph& g, const VertexSet& s);

// Every vertex of V(G) \ s.
VertexSet complement_of(const Graph& g, const VertexSet& s);

// Vertices of all edges in the list.
VertexSet endpoints(std::span<const Edge> edges);

void check_vertex_set(const Graph& g, const VertexSet& s);

}  // namespace edgekeep
