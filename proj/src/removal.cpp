#include "edgekeep/removal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edgekeep/errors.hpp"

namespace edgekeep {
namespace {

void require_k_edge_connected(const Graph& g, int k) {
  if (k < 1) throw precondition_error("k must be at least 1");
  if (!is_k_edge_connected(g, k))
    throw precondition_error("host graph is not " + std::to_string(k) + "-edge-connected");
}

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string to_string(RemovalKind kind) {
  switch (kind) {
    case RemovalKind::vertex: return "vertex";
    case RemovalKind::edge: return "edge";
    case RemovalKind::tree: return "tree";
  }
  return "?";
}

std::string to_string(ThomassenStatus status) {
  switch (status) {
    case ThomassenStatus::certified: return "certified";
    case ThomassenStatus::extraction_failed: return "extraction_failed";
    case ThomassenStatus::theorem_violation: return "theorem_violation";
  }
  return "?";
}

bool keeps_k_edge_connected(const Graph& g, int k, const VertexSet& removed) {
  check_vertex_set(g, removed);
  if (static_cast<int>(removed.size()) >= g.order()) return false;
  return is_k_edge_connected(delete_vertices(g, removed).graph, k);
}

RemovalCertificate certify_removal(const Graph& g, int k, RemovalKind kind, const VertexSet& removed) {
  check_vertex_set(g, removed);
  RemovalCertificate cert{kind, removed, std::nullopt, false};
  if (static_cast<int>(removed.size()) >= g.order()) return cert;
  Graph residual = delete_vertices(g, removed).graph;
  if (residual.order() == 1) {
    cert.verified = k <= 1;
    return cert;
  }
  int value = edge_connectivity_value(residual);
  if (residual.order() <= default_exhaustive_limit && bipartition_edge_connectivity(residual) != value)
    throw std::logic_error("flow and bipartition edge connectivity disagree on a residual graph");
  cert.residual_kprime = value;
  cert.verified = value >= k;
  return cert;
}

namespace {

RemovalCertificate confirmed(const Graph& g, int k, RemovalKind kind, const VertexSet& removed) {
  auto cert = certify_removal(g, k, kind, removed);
  if (!cert.verified) throw std::logic_error("removal witness failed re-verification");
  return cert;
}

}  // namespace

std::optional<RemovalCertificate> find_removable_vertex(const Graph& g, int k) {
  require_k_edge_connected(g, k);
  for (Vertex v = 0; v < g.order(); ++v)
    if (keeps_k_edge_connected(g, k, VertexSet{v})) return confirmed(g, k, RemovalKind::vertex, VertexSet{v});
  return std::nullopt;
}

std::optional<RemovalCertificate> find_removable_edge(const Graph& g, int k) {
  require_k_edge_connected(g, k);
  for (const Edge& e : g.edges()) {
    VertexSet ends{e.u, e.v};
    if (keeps_k_edge_connected(g, k, ends)) return confirmed(g, k, RemovalKind::edge, ends);
  }
  return std::nullopt;
}

bool for_each_embedding(const Graph& g, const TreeSpec& t, const VertexSet& allowed,
                        const std::function<bool(const Embedding&)>& visit) {
  check_vertex_set(g, allowed);
  const int m = t.order();
  std::vector<char> free(idx(g.order()), 0);
  for (Vertex v : allowed) free[idx(v)] = 1;
  std::vector<int> room(idx(g.order()), 0);
  for (Vertex v : allowed)
    for (Vertex w : g.neighbors(v)) room[idx(v)] += free[idx(w)];
  std::vector<int> need(idx(m), 0);
  for (const Edge& e : t.edges()) {
    ++need[idx(e.u)];
    ++need[idx(e.v)];
  }

  Embedding map(idx(m), -1);
  std::function<bool(int)> place = [&](int i) {
    if (i == m) return visit(map);
    auto attempt = [&](Vertex v) {
      if (!free[idx(v)] || room[idx(v)] < need[idx(i)]) return true;
      free[idx(v)] = 0;
      map[idx(i)] = v;
      bool go_on = place(i + 1);
      free[idx(v)] = 1;
      return go_on;
    };
    if (i == 0) {
      for (Vertex v : allowed)
        if (!attempt(v)) return false;
      return true;
    }
    for (Vertex w : g.neighbors(map[idx(t.parent(i))]))
      if (!attempt(w)) return false;
    return true;
  };
  return place(0);
}

std::optional<Embedding> embed_tree(const Graph& g, const TreeSpec& t, const VertexSet& allowed) {
  std::optional<Embedding> found;
  for_each_embedding(g, t, allowed, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

VertexSet image_of(const Embedding& e) { return VertexSet(std::vector<Vertex>(e.begin(), e.end())); }

std::vector<VertexSet> tree_image_sets(const Graph& g, const TreeSpec& t) {
  std::set<VertexSet> seen;
  std::vector<VertexSet> out;
  for_each_embedding(g, t, VertexSet::range(g.order()), [&](const Embedding& e) {
    VertexSet s = image_of(e);
    if (seen.insert(s).second) out.push_back(std::move(s));
    return true;
  });
  return out;
}

std::optional<RemovalCertificate> find_removable_tree(const Graph& g, int k, const TreeSpec& t) {
  require_k_edge_connected(g, k);
  if (g.order() <= t.order())
    throw precondition_error("host must have more vertices than the tree");
  std::set<VertexSet> seen;
  std::optional<VertexSet> hit;
  for_each_embedding(g, t, VertexSet::range(g.order()), [&](const Embedding& e) {
    VertexSet s = image_of(e);
    if (!seen.insert(s).second) return true;
    if (!keeps_k_edge_connected(g, k, s)) return true;
    hit = std::move(s);
    return false;
  });
  if (!hit) return std::nullopt;
  return confirmed(g, k, RemovalKind::tree, *hit);
}

namespace {

VertexSet boundary_of(const Graph& g, const VertexSet& h) {
  std::vector<char> in(idx(g.order()), 0);
  for (Vertex v : h) in[idx(v)] = 1;
  std::vector<Vertex> out;
  for (Vertex v : h)
    for (Vertex w : g.neighbors(v))
      if (!in[idx(w)]) {
        out.push_back(v);
        break;
      }
  return VertexSet(std::move(out));
}

// Drops vertices with fewer than k neighbours inside h until none remain.
VertexSet shed_low_degree(const Graph& g, VertexSet h, int k) {
  while (true) {
    std::vector<char> in(idx(g.order()), 0);
    for (Vertex v : h) in[idx(v)] = 1;
    std::vector<Vertex> keep;
    for (Vertex v : h) {
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += in[idx(w)];
      if (d >= k) keep.push_back(v);
    }
    if (keep.size() == h.size()) return h;
    h = VertexSet(std::move(keep));
  }
}

}  // namespace

bool is_valid_hc_subgraph(const Graph& g, const HCSubgraph& h, int k_target) {
  check_vertex_set(g, h.vertices);
  const std::size_t big = 4u * static_cast<std::size_t>(k_target) * static_cast<std::size_t>(k_target);
  if (h.vertices.size() <= big) return false;
  if (!h.boundary.subset_of(h.vertices) || h.boundary != boundary_of(g, h.vertices)) return false;
  if (h.boundary.size() > big / 2) return false;
  return vertex_connectivity(induced_subgraph(g, h.vertices).graph, k_target) >= k_target;
}

std::optional<HCSubgraph> extract_connected_subgraph(const Graph& g, int k_target) {
  if (k_target < 1) throw precondition_error("k_target must be at least 1");
  const long long big = 4LL * k_target * k_target;
  if (g.order() == 0 || g.min_degree() <= big)
    throw precondition_error("extraction needs minimum degree above 4 k_target^2 = " + std::to_string(big));
  VertexSet h = VertexSet::range(g.order());
  while (true) {
    h = shed_low_degree(g, std::move(h), k_target);
    if (static_cast<long long>(h.size()) <= big) return std::nullopt;
    InducedSubgraph sub = induced_subgraph(g, h);
    if (vertex_connectivity(sub.graph, k_target) >= k_target) break;
    auto sep = min_vertex_cut(sub.graph);
    if (!sep) break;
    InducedSubgraph rest = delete_vertices(sub.graph, *sep);
    auto parts = components(rest.graph);
    const VertexSet* largest = &parts.front();
    for (const auto& p : parts)
      if (p.size() > largest->size()) largest = &p;
    VertexSet keep = sub.lift(rest.lift(*largest).unite(*sep));
    if (keep.size() >= h.size()) return std::nullopt;
    h = std::move(keep);
  }
  HCSubgraph out{h, boundary_of(g, h)};
  if (!is_valid_hc_subgraph(g, out, k_target)) return std::nullopt;
  return out;
}

ThomassenResult removable_tree_via_thomassen(const Graph& g, int k, const TreeSpec& t) {
  const int kt = k + t.order();
  const long long bound = 4LL * kt * kt;
  if (g.order() == 0 || g.min_degree() <= bound)
    throw precondition_error("constructive tree removal needs minimum degree above 4 (k+m)^2 = " + std::to_string(bound));
  require_k_edge_connected(g, k);

  ThomassenResult r;
  r.subgraph = extract_connected_subgraph(g, kt);
  if (!r.subgraph) {
    r.status = ThomassenStatus::extraction_failed;
    r.detail = "no qualifying subgraph found";
    return r;
  }
  auto placed = embed_tree(g, t, r.subgraph->vertices.minus(r.subgraph->boundary));
  if (!placed) {
    r.status = ThomassenStatus::theorem_violation;
    r.detail = "no copy of the tree inside H minus its boundary";
    return r;
  }
  r.embedding = *placed;
  r.certificate = certify_removal(g, k, RemovalKind::tree, image_of(*placed));
  if (r.certificate->verified) {
    r.status = ThomassenStatus::certified;
  } else {
    r.status = ThomassenStatus::theorem_violation;
    r.detail = "residual lost " + std::to_string(k) + "-edge-connectivity";
  }
  return r;
}

bool CutDecomposition::consistent() const {
  if (!d_bounds_hold) return false;
  if (h_connected && !(dichotomy9 && dichotomy10)) return false;
  if (h_connected && large_h && !dichotomy11) return false;
  return true;
}

CutDecomposition decompose_cut(const Graph& g, const HCSubgraph& h, const VertexSet& tprime, const EdgeCut& u, int k) {
  check_vertex_set(g, h.vertices);
  check_vertex_set(g, tprime);
  if (k < 1) throw precondition_error("k must be at least 1");
  if (tprime.empty() || !tprime.subset_of(h.vertices) || tprime.intersects(h.boundary))
    throw precondition_error("the tree copy must lie in H minus its boundary");
  if (static_cast<int>(u.value()) > k - 1) throw precondition_error("cut value must be at most k-1");
  const VertexSet rest = complement_of(g, tprime);
  if (u.side_a.intersects(u.side_b) || u.side_a.unite(u.side_b) != rest)
    throw precondition_error("cut sides must partition V(G) minus the tree copy");

  InducedSubgraph residual = delete_vertices(g, tprime);
  std::vector<Vertex> local_a;
  for (Vertex v : u.side_a) local_a.push_back(residual.from_parent[idx(v)]);
  EdgeCut local = cut_from_side(residual.graph, VertexSet(std::move(local_a)));
  std::vector<Edge> lifted;
  for (const Edge& e : local.edges) lifted.push_back(residual.lift(e));
  std::sort(lifted.begin(), lifted.end());
  std::vector<Edge> given = u.edges;
  std::sort(given.begin(), given.end());
  if (lifted != given || !is_valid_cut(residual.graph, local))
    throw precondition_error("edges do not form the cut between the given sides");
  if (edge_connectivity_value(residual.graph) != static_cast<int>(u.value()))
    throw precondition_error("cut is not minimum in G minus the tree copy");

  const VertexSet hbar = complement_of(g, h.vertices);
  const VertexSet& f = u.side_a;
  const VertexSet& fp = u.side_b;
  const VertexSet ends = endpoints(u.edges);
  CutDecomposition d;
  d.h1 = f.intersect(h.vertices);
  d.h2 = fp.intersect(h.vertices);
  d.hbar1 = f.intersect(hbar);
  d.hbar2 = fp.intersect(hbar);
  d.d1 = ends.intersect(f);
  d.d2 = ends.intersect(fp);

  const int km = k + static_cast<int>(tprime.size());
  d.d_bounds_hold = static_cast<int>(d.d1.size()) <= k - 1 && static_cast<int>(d.d2.size()) <= k - 1;
  d.h_connected = vertex_connectivity(induced_subgraph(g, h.vertices).graph, km) >= km;
  d.large_h = static_cast<long long>(h.vertices.size()) > 4LL * km * km;
  d.dichotomy9 = d.h1.minus(d.d1).empty() || d.h2.empty();
  d.dichotomy10 = d.h2.minus(d.d2).empty() || d.h1.empty();
  d.dichotomy11 = !d.h1.minus(d.d1).empty() || !d.h2.minus(d.d2).empty();
  return d;
}

}  // namespace edgekeep
