#include "edgekeep/fragments.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "edgekeep/errors.hpp"

namespace edgekeep {
namespace {

VertexSet ends(const Edge& e) { return VertexSet{e.u, e.v}; }

bool inside(const Edge& e, const VertexSet& s) { return s.contains(e.u) && s.contains(e.v); }

// Builds a Fragment from a side already known to be valid.
Fragment assemble(const Graph& g, const InducedSubgraph& host, const VertexSet& removed, VertexSet side) {
  Fragment f;
  f.host = host;
  f.removed = removed;
  f.complement = VertexSet(host.to_parent).minus(side);
  f.side = std::move(side);
  f.cut.side_a = f.side;
  f.cut.side_b = f.complement;
  for (Vertex u : f.side)
    for (Vertex w : g.neighbors(u))
      if (f.complement.contains(w)) f.cut.edges.emplace_back(u, w);
  std::sort(f.cut.edges.begin(), f.cut.edges.end());
  return f;
}

// Fragment test against a host whose edge connectivity is already known.
bool is_fragment_side(const Graph& g, const VertexSet& host_vertices, int lambda, const VertexSet& side) {
  if (side.empty() || !side.subset_of(host_vertices) || side.size() == host_vertices.size()) return false;
  VertexSet rest = host_vertices.minus(side);
  if (boundary_edge_count(g, side, rest) != static_cast<std::size_t>(lambda)) return false;
  if (!induces_connected(g, side)) return false;
  return lambda == 0 || induces_connected(g, rest);
}

void require_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    std::ostringstream msg;
    msg << "edge " << e << " is not in the graph";
    throw precondition_error(msg.str());
  }
}

void require_fragment_of(const Graph& g, const Edge& e, const Fragment& f, const char* name) {
  if (f.removed != ends(e) || !is_fragment(g, f.removed, f.side) ||
      f.complement != VertexSet(f.host.to_parent).minus(f.side) || f.host.to_parent != complement_of(g, f.removed).ids()) {
    std::ostringstream msg;
    msg << name << " is not a fragment of G - V" << e;
    throw precondition_error(msg.str());
  }
}

Lemma21Check evaluate_lemma21(const Graph& g, const Edge& e, const Edge& e1, const Fragment& f, const Fragment& f1) {
  Lemma21Check r;
  if (e.shares_endpoint(e1)) return r;
  if (!inside(e, f1.side) || !inside(e1, f.complement)) return r;
  VertexSet meet = f.side.intersect(f1.side);
  if (meet.empty()) return r;

  if (f.complement.intersects(f1.complement)) {
    const int lambda = f.host_edge_connectivity();
    VertexSet side_rest = f.side.intersect(f1.complement);
    VertexSet host_rest = f.side.unite(f.complement).minus(meet);
    r.d_meet_to_side_rest = boundary_edge_count(g, meet, side_rest);
    r.d_side_rest_to_far = boundary_edge_count(g, side_rest, f.complement);
    r.d_meet_boundary = boundary_edge_count(g, meet, host_rest);
    r.equality_holds = r.d_meet_to_side_rest == r.d_side_rest_to_far;
    r.meet_is_min_cut = r.d_meet_boundary == static_cast<std::size_t>(lambda);
    bool fragment = is_fragment_side(g, VertexSet(f.host.to_parent), lambda, meet);
    r.verdict = fragment ? Lemma21Verdict::alpha_holds : Lemma21Verdict::alpha_violated;
  } else {
    r.verdict = f.complement.size() < f1.side.size() ? Lemma21Verdict::beta_holds : Lemma21Verdict::beta_violated;
  }
  return r;
}

}  // namespace

bool is_fragment(const Graph& g, const VertexSet& removed, const VertexSet& side) {
  check_vertex_set(g, removed);
  check_vertex_set(g, side);
  VertexSet host_vertices = complement_of(g, removed);
  if (host_vertices.size() < 2) return false;
  Graph host = induced_subgraph(g, host_vertices).graph;
  return is_fragment_side(g, host_vertices, edge_connectivity_value(host), side);
}

Fragment make_fragment(const Graph& g, const VertexSet& removed, const VertexSet& side) {
  if (!is_fragment(g, removed, side)) {
    std::ostringstream msg;
    msg << side << " is not a fragment of G - " << removed;
    throw precondition_error(msg.str());
  }
  return assemble(g, delete_vertices(g, removed), removed, side);
}

Semifragment make_semifragment(const Graph& g, const VertexSet& removed, std::vector<Edge> cut,
                               const VertexSet& side) {
  check_vertex_set(g, removed);
  check_vertex_set(g, side);
  InducedSubgraph host = delete_vertices(g, removed);
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  std::vector<Edge> kept;
  for (const Edge& e : host.graph.edges()) {
    Edge lifted = host.lift(e);
    if (!std::binary_search(cut.begin(), cut.end(), lifted)) kept.emplace_back(e);
  }
  for (const Edge& e : cut)
    if (!g.has_edge(e) || removed.contains(e.u) || removed.contains(e.v))
      throw precondition_error("semifragment cut edge outside the host");
  auto parts = components(Graph::build(host.graph.order(), kept));
  if (parts.size() < 2) throw precondition_error("semifragment cut does not disconnect the host");
  // The side must be a union of some, but not all, components.
  std::size_t used = 0;
  std::size_t covered = 0;
  for (const VertexSet& part : parts) {
    VertexSet lifted = host.lift(part);
    if (lifted.subset_of(side)) {
      ++used;
      covered += lifted.size();
    } else if (lifted.intersects(side)) {
      throw precondition_error("semifragment side splits a component");
    }
  }
  if (used == 0 || used == parts.size() || covered != side.size())
    throw precondition_error("semifragment side must be a union of some but not all components");
  return Semifragment{std::move(host), removed, side, std::move(cut)};
}

std::vector<Fragment> all_fragments(const Graph& g, const Edge& e, int max_vertices) {
  require_edge(g, e);
  VertexSet removed = ends(e);
  InducedSubgraph host = delete_vertices(g, removed, true);
  std::vector<Fragment> out;
  if (host.graph.order() < 2) return out;
  auto parts = components(host.graph);
  if (parts.size() > 1) {
    for (const VertexSet& part : parts) out.push_back(assemble(g, host, removed, host.lift(part)));
  } else {
    for (const EdgeCut& cut : enumerate_min_edge_cuts(host.graph, max_vertices)) {
      out.push_back(assemble(g, host, removed, host.lift(cut.side_a)));
      out.push_back(assemble(g, host, removed, host.lift(cut.side_b)));
    }
  }
  std::sort(out.begin(), out.end(), [](const Fragment& a, const Fragment& b) { return a.side < b.side; });
  return out;
}

std::vector<Fragment> fragments_of(const Graph& g, const Edge& e, int k, int max_vertices) {
  require_edge(g, e);
  if (g.order() < 4) throw precondition_error("fragments_of needs at least four vertices");
  if (k < 1) throw precondition_error("k must be positive");
  Graph host = delete_vertices(g, ends(e)).graph;
  if (is_k_edge_connected(host, k)) return {};
  return all_fragments(g, e, max_vertices);
}

const char* to_string(Lemma21Verdict v) {
  switch (v) {
    case Lemma21Verdict::alpha_holds: return "alpha_holds";
    case Lemma21Verdict::beta_holds: return "beta_holds";
    case Lemma21Verdict::hypotheses_unmet: return "hypotheses_unmet";
    case Lemma21Verdict::alpha_violated: return "alpha_violated";
    case Lemma21Verdict::beta_violated: return "beta_violated";
  }
  return "?";
}

Lemma21Check check_lemma21(const Graph& g, const Edge& e, const Edge& e1, const Fragment& f, const Fragment& f1) {
  require_edge(g, e);
  require_edge(g, e1);
  require_fragment_of(g, e, f, "F");
  require_fragment_of(g, e1, f1, "F1");
  return evaluate_lemma21(g, e, e1, f, f1);
}

Lemma21Tally& Lemma21Tally::operator+=(const Lemma21Tally& o) {
  configurations += o.configurations;
  alpha += o.alpha;
  beta += o.beta;
  violations += o.violations;
  equality_failures += o.equality_failures;
  min_cut_failures += o.min_cut_failures;
  return *this;
}

Lemma21Tally validate_lemma21(const Graph& g, int max_vertices) {
  Lemma21Tally tally;
  const auto edges = g.edges();
  std::vector<std::vector<Fragment>> frags;
  frags.reserve(edges.size());
  for (const Edge& e : edges) frags.push_back(all_fragments(g, e, max_vertices));

  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (edges[i].shares_endpoint(edges[j])) continue;
      for (const Fragment& f : frags[i])
        for (const Fragment& f1 : frags[j]) {
          Lemma21Check c = evaluate_lemma21(g, edges[i], edges[j], f, f1);
          switch (c.verdict) {
            case Lemma21Verdict::hypotheses_unmet: continue;
            case Lemma21Verdict::alpha_holds: ++tally.alpha; break;
            case Lemma21Verdict::beta_holds: ++tally.beta; break;
            case Lemma21Verdict::alpha_violated:
            case Lemma21Verdict::beta_violated: ++tally.violations; break;
          }
          ++tally.configurations;
          bool alpha_case = c.verdict == Lemma21Verdict::alpha_holds || c.verdict == Lemma21Verdict::alpha_violated;
          if (alpha_case && !c.equality_holds) ++tally.equality_failures;
          if (alpha_case && !c.meet_is_min_cut) ++tally.min_cut_failures;
        }
    }
  return tally;
}

std::vector<FamilyMember> fragment_family(const Graph& g, int k, const Edge& e0, const Fragment& f0,
                                          int max_vertices) {
  require_edge(g, e0);
  require_fragment_of(g, e0, f0, "F0");
  VertexSet region = f0.side.unite(ends(e0));
  std::vector<FamilyMember> family;
  for (const Edge& e : g.edges()) {
    if (!inside(e, region)) continue;
    Graph host = delete_vertices(g, ends(e), true).graph;
    if (host.order() < 2 || is_k_edge_connected(host, k)) continue;
    for (Fragment& f : all_fragments(g, e, max_vertices))
      if (f.side.subset_of(region)) family.push_back({e, std::move(f)});
  }
  return family;
}

DescentResult minimal_fragment_descent(const Graph& g, int k, const Edge& e0, const Fragment& f0, int max_vertices) {
  if (k < 1) throw precondition_error("k must be positive");
  if (!is_k_edge_connected(g, k)) throw precondition_error("descent needs a k-edge-connected graph");
  if (g.min_degree() < k + 2) throw precondition_error("descent needs minimum degree at least k + 2");
  require_edge(g, e0);
  if (is_k_edge_connected(delete_vertices(g, ends(e0)).graph, k))
    throw precondition_error("descent needs κ'(G - V(e0)) < k");
  require_fragment_of(g, e0, f0, "F0");

  auto family = fragment_family(g, k, e0, f0, max_vertices);
  auto key = [](const FamilyMember& m) { return std::tie(m.fragment.side, m.e); };
  auto best = std::min_element(family.begin(), family.end(), [&](const FamilyMember& a, const FamilyMember& b) {
    if (a.fragment.side.size() != b.fragment.side.size()) return a.fragment.side.size() < b.fragment.side.size();
    return key(a) < key(b);
  });
  // F0 itself belongs to the family, so it is never empty.
  return DescentResult{best->e, best->fragment, f0.side.unite(ends(e0)), family.size()};
}

DescentConclusion verify_descent_conclusion(const Graph& g, int k, const DescentResult& r, int max_vertices) {
  require_fragment_of(g, r.e1, r.f1, "F1");
  DescentConclusion out;
  out.fragment_min_degree = induced_subgraph(g, r.f1.side).graph.min_degree();
  for (const Edge& e : g.edges()) {
    if (!inside(e, r.f1.side)) continue;
    Graph host = delete_vertices(g, ends(e), true).graph;
    if (host.order() < 2 || is_k_edge_connected(host, k)) continue;
    ++out.deficient_edges;
    for (const Fragment& f : all_fragments(g, e, max_vertices)) {
      if (inside(r.e1, f.side)) continue;
      bool meets = f.side.intersects(r.f1.side);
      if (inside(r.e1, f.complement)) {
        ++out.fragments_checked;
        if (meets) ++out.violations;
      } else {
        ++out.straddling;
        if (meets) ++out.straddling_meeting;
      }
    }
  }
  return out;
}

bool DegreeBoundReport::all_hold() const {
  if (static_cast<long long>(cut_value) < total_lower_bound) return false;
  return std::all_of(vertices.begin(), vertices.end(),
                     [](const VertexBound& b) { return b.across_bound_holds && b.inside_bound_holds; });
}

DegreeBoundReport fragment_degree_bounds(const Graph& g, const Edge& e1, const Fragment& f1, int k) {
  if (k < 1) throw precondition_error("k must be positive");
  if (g.min_degree() < k + 2) throw precondition_error("degree bounds need minimum degree at least k + 2");
  require_edge(g, e1);
  require_fragment_of(g, e1, f1, "F1");
  DegreeBoundReport r;
  r.fragment_size = static_cast<int>(f1.side.size());
  r.required_across = k - r.fragment_size + 1;
  r.cut_value = f1.cut.value();
  r.total_lower_bound = static_cast<long long>(r.fragment_size) * std::max(0, r.required_across);
  const VertexSet tips = ends(e1);
  for (Vertex z : f1.side) {
    VertexBound b;
    b.z = z;
    for (Vertex w : g.neighbors(z)) {
      if (f1.complement.contains(w)) ++b.across;
      else if (f1.side.contains(w)) ++b.inside;
      else if (tips.contains(w)) ++b.to_e1;
    }
    b.across_bound_holds = b.across >= r.required_across;
    b.inside_bound_holds = b.across > 0 || b.inside >= k;
    r.vertices.push_back(b);
  }
  return r;
}

}  // namespace edgekeep
