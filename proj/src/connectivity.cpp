#include "edgekeep/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "edgekeep/errors.hpp"
#include "flow.hpp"

namespace edgekeep {
namespace {

using detail::FlowNetwork;

struct SetFlow {
  int value;
  std::vector<char> source_side;  // per vertex, only filled when requested
};

// Unit-capacity edge flow between two disjoint vertex sets, collapsed onto a
// super source and super sink.
SetFlow set_edge_flow(const Graph& g, const std::vector<char>& in_source, const std::vector<char>& in_sink,
                      int limit, bool want_side) {
  const int n = g.order();
  const int src = n;
  const int snk = n + 1;
  FlowNetwork net(n + 2);
  for (Vertex u = 0; u < n; ++u) {
    if (in_source[static_cast<std::size_t>(u)]) net.add_arc(src, u, FlowNetwork::infinite);
    if (in_sink[static_cast<std::size_t>(u)]) net.add_arc(u, snk, FlowNetwork::infinite);
    for (Vertex w : g.neighbors(u))
      if (u < w) net.add_arc(u, w, 1, 1);
  }
  SetFlow out{net.max_flow(src, snk, limit), {}};
  if (want_side) {
    auto reach = net.residual_reach(src);
    out.source_side.assign(reach.begin(), reach.begin() + n);
  }
  return out;
}

int pair_edge_flow(const Graph& g, Vertex s, Vertex t, int limit) {
  std::vector<char> a(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> b(static_cast<std::size_t>(g.order()), 0);
  a[static_cast<std::size_t>(s)] = 1;
  b[static_cast<std::size_t>(t)] = 1;
  return set_edge_flow(g, a, b, limit, false).value;
}

std::size_t boundary_of(const Graph& g, const std::vector<char>& member) {
  std::size_t count = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    if (member[static_cast<std::size_t>(u)])
      for (Vertex w : g.neighbors(u))
        if (!member[static_cast<std::size_t>(w)]) ++count;
  return count;
}

VertexSet members(const std::vector<char>& flag) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < flag.size(); ++i)
    if (flag[i]) out.push_back(static_cast<Vertex>(i));
  return VertexSet(std::move(out));
}

// Greedy construction of the lexicographically smallest minimum-cut side.
// Vertex 0 is always in the side. Vertices are then decided in ascending
// order: stop if the current set already is a minimum side (a prefix is the
// smallest continuation), otherwise include v iff some minimum cut is
// consistent with every decision so far plus v.
VertexSet lex_smallest_min_side(const Graph& g, int lambda, Vertex witness) {
  const int n = g.order();
  std::vector<char> inc(static_cast<std::size_t>(n), 0);
  std::vector<char> exc(static_cast<std::size_t>(n), 0);
  inc[0] = 1;
  bool any_excluded = false;
  for (Vertex v = 1; v < n; ++v) {
    if (boundary_of(g, inc) == static_cast<std::size_t>(lambda)) break;
    inc[static_cast<std::size_t>(v)] = 1;
    bool feasible = false;
    if (any_excluded) {
      feasible = set_edge_flow(g, inc, exc, lambda + 1, false).value == lambda;
    } else {
      std::vector<Vertex> order;
      if (witness >= 0 && !inc[static_cast<std::size_t>(witness)]) order.push_back(witness);
      for (Vertex t = v + 1; t < n; ++t)
        if (t != witness) order.push_back(t);
      for (Vertex t : order) {
        std::vector<char> sink(static_cast<std::size_t>(n), 0);
        sink[static_cast<std::size_t>(t)] = 1;
        if (set_edge_flow(g, inc, sink, lambda + 1, false).value == lambda) {
          feasible = true;
          witness = t;
          break;
        }
      }
    }
    if (!feasible) {
      inc[static_cast<std::size_t>(v)] = 0;
      exc[static_cast<std::size_t>(v)] = 1;
      any_excluded = true;
    }
  }
  return members(inc);
}

std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w : g.neighbors(u)) adj[static_cast<std::size_t>(u)] |= 1u << w;
  return adj;
}

int mask_boundary(const std::vector<std::uint32_t>& adj, std::uint32_t side, std::uint32_t all) {
  int count = 0;
  for (std::uint32_t rest = side; rest; rest &= rest - 1)
    count += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & ~side & all);
  return count;
}

bool mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t set) {
  if (set == 0) return false;
  std::uint32_t seen = set & (~set + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t rest = frontier; rest; rest &= rest - 1)
      next |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

VertexSet mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return VertexSet(std::move(out));
}

void require_exhaustive(const Graph& g, int max_vertices) {
  if (max_vertices > 30) throw precondition_error("exhaustive limit above 30 vertices is not supported");
  if (g.order() > max_vertices)
    throw limit_error("graph has " + std::to_string(g.order()) + " vertices, above the exhaustive limit " +
                      std::to_string(max_vertices));
}

// Local vertex connectivity between nonadjacent s and t, optionally
// extracting the separating set.
int pair_vertex_flow(const Graph& g, Vertex s, Vertex t, int limit, VertexSet* separator) {
  const int n = g.order();
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    int cap = (v == s || v == t) ? FlowNetwork::infinite : 1;
    net.add_arc(2 * v, 2 * v + 1, cap);
    for (Vertex w : g.neighbors(v)) net.add_arc(2 * v + 1, 2 * w, FlowNetwork::infinite);
  }
  int value = net.max_flow(2 * s, 2 * t + 1, limit);
  if (separator) {
    auto reach = net.residual_reach(2 * s);
    std::vector<Vertex> cut;
    for (Vertex v = 0; v < n; ++v)
      if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)]) cut.push_back(v);
    *separator = VertexSet(std::move(cut));
  }
  return value;
}

}  // namespace

EdgeCut cut_from_side(const Graph& g, const VertexSet& side) {
  check_vertex_set(g, side);
  EdgeCut cut;
  cut.side_a = side;
  cut.side_b = complement_of(g, side);
  for (Vertex u : side)
    for (Vertex w : g.neighbors(u))
      if (!side.contains(w)) cut.edges.emplace_back(u, w);
  std::sort(cut.edges.begin(), cut.edges.end());
  return cut;
}

bool is_valid_cut(const Graph& g, const EdgeCut& cut) {
  if (cut.side_a.empty() || cut.side_b.empty()) return false;
  if (cut.side_a.intersects(cut.side_b)) return false;
  if (cut.side_a.unite(cut.side_b) != VertexSet::range(g.order())) return false;
  for (const Edge& e : cut.edges) {
    if (!g.has_edge(e)) return false;
    if (cut.side_a.contains(e.u) == cut.side_a.contains(e.v)) return false;
  }
  // Re-delete the edges and recompute components: no component may meet both sides.
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!std::binary_search(cut.edges.begin(), cut.edges.end(), e)) kept.push_back(e);
  Graph rest = Graph::build(g.order(), kept);
  for (const VertexSet& c : components(rest))
    if (c.intersects(cut.side_a) && c.intersects(cut.side_b)) return false;
  return true;
}

int edge_connectivity_value(const Graph& g, int cap) {
  if (g.order() < 2) throw precondition_error("edge connectivity needs at least two vertices");
  int best = std::min(g.min_degree(), cap);
  for (Vertex t = 1; t < g.order() && best > 0; ++t) best = std::min(best, pair_edge_flow(g, 0, t, best));
  return best;
}

EdgeConnectivity edge_connectivity(const Graph& g) {
  if (g.order() < 2) throw precondition_error("edge connectivity needs at least two vertices");
  auto comps = components(g);
  if (comps.size() > 1) return {0, cut_from_side(g, comps.front())};

  int best = g.min_degree();
  Vertex witness = -1;  // a vertex opposite 0 in some minimum cut; only a search hint
  for (Vertex t = 1; t < g.order(); ++t) {
    int f = pair_edge_flow(g, 0, t, best);
    if (f < best) {
      best = f;
      witness = t;
    }
  }
  if (witness < 0)
    for (Vertex t = 1; t < g.order() && witness < 0; ++t)
      if (g.degree(t) == best) witness = t;
  return {best, cut_from_side(g, lex_smallest_min_side(g, best, witness))};
}

bool is_k_edge_connected(const Graph& g, int k) {
  if (k < 1) throw precondition_error("k must be positive");
  if (g.order() == 0) return false;
  if (g.order() == 1) return k == 1;
  return edge_connectivity_value(g, k) >= k;
}

int local_edge_connectivity(const Graph& g, Vertex s, Vertex t) {
  if (!g.valid_vertex(s) || !g.valid_vertex(t)) throw precondition_error("vertex out of range");
  if (s == t) throw precondition_error("local edge connectivity needs distinct endpoints");
  return pair_edge_flow(g, s, t, FlowNetwork::infinite);
}

int vertex_connectivity(const Graph& g, int cap) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = std::min(n - 1, cap);
  // Some vertex among the first κ+1 lies outside a minimum separator.
  for (Vertex s = 0; s <= best && s < n; ++s)
    for (Vertex t = 0; t < n && best > 0; ++t)
      if (t != s && !g.has_edge(s, t)) best = std::min(best, pair_vertex_flow(g, s, t, best, nullptr));
  return best;
}

std::optional<VertexSet> min_vertex_cut(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return std::nullopt;
  auto comps = components(g);
  if (comps.size() > 1) return VertexSet{};
  int best = n - 1;
  Vertex best_s = -1;
  Vertex best_t = -1;
  for (Vertex s = 0; s <= best && s < n; ++s)
    for (Vertex t = 0; t < n; ++t)
      if (t != s && !g.has_edge(s, t)) {
        int f = pair_vertex_flow(g, s, t, best, nullptr);
        if (f < best || best_s < 0) {
          best = f;
          best_s = s;
          best_t = t;
        }
      }
  if (best_s < 0) return std::nullopt;
  VertexSet sep;
  pair_vertex_flow(g, best_s, best_t, FlowNetwork::infinite, &sep);
  return sep;
}

std::vector<EdgeCut> enumerate_min_edge_cuts(const Graph& g, int max_vertices) {
  require_exhaustive(g, max_vertices);
  if (g.order() < 2) throw precondition_error("cut enumeration needs at least two vertices");
  if (!is_connected(g)) throw precondition_error("cut enumeration needs a connected graph");
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  const std::uint32_t all = full_mask(n);
  const int lambda = edge_connectivity_value(g);
  std::vector<EdgeCut> out;
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    std::uint32_t side = (rest << 1) | 1u;
    if (side == all) continue;
    if (mask_boundary(adj, side, all) != lambda) continue;
    if (!mask_connected(adj, side) || !mask_connected(adj, all & ~side)) continue;
    out.push_back(cut_from_side(g, mask_to_set(side)));
  }
  std::sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) { return a.side_a < b.side_a; });
  return out;
}

int bipartition_edge_connectivity(const Graph& g, int max_vertices) {
  require_exhaustive(g, max_vertices);
  if (g.order() < 2) throw precondition_error("edge connectivity needs at least two vertices");
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  const std::uint32_t all = full_mask(n);
  int best = INT_MAX;
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    std::uint32_t side = (rest << 1) | 1u;
    if (side != all) best = std::min(best, mask_boundary(adj, side, all));
  }
  return best;
}

ConnectivityReport connectivity_report(const Graph& g) {
  ConnectivityReport r;
  r.n = g.order();
  r.edge_count = g.edge_count();
  r.min_degree = g.min_degree();
  if (g.order() >= 2) r.edge_connectivity = edge_connectivity_value(g);
  r.vertex_connectivity = vertex_connectivity(g);
  return r;
}

}  // namespace edgekeep
