#include "edgekeep/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "edgekeep/errors.hpp"

namespace edgekeep {

std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << '(' << e.u << ',' << e.v << ')'; }

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(Vertex n) {
  VertexSet s;
  s.ids_.resize(static_cast<std::size_t>(std::max(n, 0)));
  for (Vertex i = 0; i < n; ++i) s.ids_[static_cast<std::size_t>(i)] = i;
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexSet VertexSet::unite(const VertexSet& o) const {
  VertexSet r;
  std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(r.ids_));
  return r;
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
  VertexSet r;
  std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(r.ids_));
  return r;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
  VertexSet r;
  std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(r.ids_));
  return r;
}

bool VertexSet::intersects(const VertexSet& o) const {
  auto a = ids_.begin();
  auto b = o.ids_.begin();
  while (a != ids_.end() && b != o.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  return std::includes(o.ids_.begin(), o.ids_.end(), ids_.begin(), ids_.end());
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 0) throw precondition_error("negative vertex count");
  Graph g;
  g.adj_.resize(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw precondition_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw precondition_error("self-loop at vertex " + std::to_string(e.u));
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::size_t twice = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += nb.size();
  }
  g.m_ = twice / 2;
  return g;
}

Graph Graph::build(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.emplace_back(a, b);
  return build(n, list);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!valid_vertex(a) || !valid_vertex(b)) return false;
  const auto& nb = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t best = adj_.front().size();
  for (const auto& nb : adj_) best = std::min(best, nb.size());
  return static_cast<int>(best);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(parent_of(v));
  return VertexSet(std::move(out));
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.front() < 0 || s.ids().back() >= g.order())) {
    throw precondition_error("vertex set " + [&] {
      std::string r;
      for (Vertex v : s) r += std::to_string(v) + " ";
      return r;
    }() + "is not within 0.." + std::to_string(g.order() - 1));
  }
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  InducedSubgraph r;
  r.to_parent = s.ids();
  r.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < r.to_parent.size(); ++i)
    r.from_parent[static_cast<std::size_t>(r.to_parent[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u)) {
      Vertex a = r.from_parent[static_cast<std::size_t>(u)];
      Vertex b = r.from_parent[static_cast<std::size_t>(w)];
      if (b >= 0 && a < b) edges.emplace_back(a, b);
    }
  r.graph = Graph::build(static_cast<int>(s.size()), edges);
  return r;
}

VertexSet complement_of(const Graph& g, const VertexSet& s) { return VertexSet::range(g.order()).minus(s); }

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s, bool allow_empty) {
  check_vertex_set(g, s);
  if (!allow_empty && s.size() == static_cast<std::size_t>(g.order()))
    throw precondition_error("deleting every vertex leaves the null graph");
  return induced_subgraph(g, complement_of(g, s));
}

std::size_t boundary_edge_count(const Graph& g, const VertexSet& v1, const VertexSet& v2) {
  check_vertex_set(g, v1);
  check_vertex_set(g, v2);
  if (v1.intersects(v2)) throw precondition_error("boundary_edge_count needs disjoint vertex sets");
  std::size_t count = 0;
  for (Vertex u : v1)
    for (Vertex w : g.neighbors(u))
      if (v2.contains(w)) ++count;
  return count;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> block;
    label[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      block.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(block));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  return is_connected(induced_subgraph(g, s).graph);
}

VertexSet endpoints(std::span<const Edge> edges) {
  std::vector<Vertex> out;
  out.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  return VertexSet(std::move(out));
}

}  // namespace edgekeep
