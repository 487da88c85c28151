#pragma once

#include <cstddef>
#include <vector>

#include "edgekeep/connectivity.hpp"
#include "edgekeep/graph.hpp"

namespace edgekeep {

// A fragment of the host G - removed: one side of a minimum edge cut of the
// host. All vertex ids are in G's labelling; `host` carries the map to the
// host's own 0-based ids. For a disconnected host (κ' = 0) a fragment is a
// single component and the cut is empty.
struct Fragment {
  InducedSubgraph host;
  VertexSet removed;     // V(e) for the usual G - V(e) host
  VertexSet side;        // F
  VertexSet complement;  // F' = host - F
  EdgeCut cut;           // U in G's labels: side_a = side, side_b = complement

  int host_edge_connectivity() const { return static_cast<int>(cut.value()); }
};

// A union of at least one but not all components of host - U for an
// arbitrary edge cut U of the host.
struct Semifragment {
  InducedSubgraph host;
  VertexSet removed;
  VertexSet side;
  std::vector<Edge> cut;  // G's labels
};

// Is `side` a fragment of G - removed?
bool is_fragment(const Graph& g, const VertexSet& removed, const VertexSet& side);

// Throws precondition_error unless `side` is a fragment of G - removed.
Fragment make_fragment(const Graph& g, const VertexSet& removed, const VertexSet& side);

// Throws precondition_error unless `side` is a semifragment of G - removed to
// `cut` (given in G's labels; every edge must lie inside the host).
Semifragment make_semifragment(const Graph& g, const VertexSet& removed, std::vector<Edge> cut,
                               const VertexSet& side);

// All fragments of G - V(e) over all of its minimum cuts, both orientations,
// sorted by side. Empty when the host has fewer than two vertices.
std::vector<Fragment> all_fragments(const Graph& g, const Edge& e, int max_vertices = default_exhaustive_limit);

// The fragments of G - V(e) when κ'(G - V(e)) < k, otherwise nothing.
// Requires e ∈ E(G) and n >= 4.
std::vector<Fragment> fragments_of(const Graph& g, const Edge& e, int k,
                                   int max_vertices = default_exhaustive_limit);

// --- Intersection lemma for two fragments -------------------------------
//
// Setting: e, e1 disjoint edges; F a fragment of G - V(e), F1 a fragment of
// G - V(e1), with e ⊆ F1, e1 ⊆ F' and F ∩ F1 nonempty. Then either
// F' ∩ F1' ≠ ∅ and F ∩ F1 is itself a fragment of G - V(e) (alpha), or
// F' ∩ F1' = ∅ and |F'| < |F1| (beta).

enum class Lemma21Verdict { alpha_holds, beta_holds, hypotheses_unmet, alpha_violated, beta_violated };

const char* to_string(Lemma21Verdict v);

struct Lemma21Check {
  Lemma21Verdict verdict = Lemma21Verdict::hypotheses_unmet;
  // Populated in the alpha case.
  std::size_t d_meet_to_side_rest = 0;  // d_G(F∩F1, F∩F1')
  std::size_t d_side_rest_to_far = 0;   // d_G(F∩F1', F')
  std::size_t d_meet_boundary = 0;      // d_{G-V(e)}(F∩F1, everything else)
  bool equality_holds = false;          // the two counts above agree
  bool meet_is_min_cut = false;         // d_meet_boundary == κ'(G - V(e))
};

// Throws precondition_error when f or f1 is not a fragment of G - V(e),
// resp. G - V(e1), or when e or e1 is not an edge of G.
Lemma21Check check_lemma21(const Graph& g, const Edge& e, const Edge& e1, const Fragment& f, const Fragment& f1);

struct Lemma21Tally {
  std::size_t configurations = 0;  // hypothesis-satisfying (e, e1, F, F1)
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t violations = 0;
  std::size_t equality_failures = 0;  // alpha cases where the two counts differ
  std::size_t min_cut_failures = 0;   // alpha cases whose meet is not a min cut

  Lemma21Tally& operator+=(const Lemma21Tally& o);
};

// Runs check_lemma21 over every ordered pair of disjoint edges and every pair
// of fragments of the two hosts.
Lemma21Tally validate_lemma21(const Graph& g, int max_vertices = default_exhaustive_limit);

// --- Minimal fragment descent -------------------------------------------

struct FamilyMember {
  Edge e;
  Fragment fragment;
};

// Every fragment F of G - V(e), over every e ∈ E(G[V(F0) ∪ V(e0)]) with
// κ'(G - V(e)) < k, such that F ⊆ V(F0) ∪ V(e0).
std::vector<FamilyMember> fragment_family(const Graph& g, int k, const Edge& e0, const Fragment& f0,
                                          int max_vertices = default_exhaustive_limit);

struct DescentResult {
  Edge e1;
  Fragment f1;
  VertexSet region;  // V(F0) ∪ V(e0)
  std::size_t family_size = 0;
};

// Picks the smallest member of fragment_family (ties: lexicographically
// smallest side, then smallest edge). Requires κ'(G) >= k, δ(G) >= k + 2,
// κ'(G - V(e0)) < k and F0 a fragment of G - V(e0).
DescentResult minimal_fragment_descent(const Graph& g, int k, const Edge& e0, const Fragment& f0,
                                       int max_vertices = default_exhaustive_limit);

// Exhaustive check of the descent's guarantee: for each e ⊆ F1 with
// κ'(G - V(e)) < k, each fragment F of G - V(e) not containing e1 misses F1.
// Fragments that contain exactly one end of e1 are tallied separately.
struct DescentConclusion {
  std::size_t deficient_edges = 0;
  std::size_t fragments_checked = 0;  // e1 inside F'
  std::size_t violations = 0;
  std::size_t straddling = 0;  // e1 split across the cut
  std::size_t straddling_meeting = 0;
  int fragment_min_degree = 0;  // δ(G[F1])

  bool holds() const { return violations == 0; }
};

DescentConclusion verify_descent_conclusion(const Graph& g, int k, const DescentResult& r,
                                            int max_vertices = default_exhaustive_limit);

// --- Degree bounds inside a small fragment --------------------------------

struct VertexBound {
  Vertex z = 0;
  int across = 0;  // |N(z) ∩ F1'|
  int inside = 0;  // |N(z) ∩ F1|
  int to_e1 = 0;   // |N(z) ∩ V(e1)|
  bool across_bound_holds = false;  // across >= k - |F1| + 1
  bool inside_bound_holds = true;   // across == 0 implies inside >= k
};

struct DegreeBoundReport {
  int fragment_size = 0;
  int required_across = 0;  // k - |F1| + 1
  std::size_t cut_value = 0;
  long long total_lower_bound = 0;  // |F1| * max(0, k - |F1| + 1), at most cut_value
  std::vector<VertexBound> vertices;

  bool all_hold() const;
};

// Requires δ(G) >= k + 2 and F1 a fragment of G - V(e1).
DegreeBoundReport fragment_degree_bounds(const Graph& g, const Edge& e1, const Fragment& f1, int k);

}  // namespace edgekeep
