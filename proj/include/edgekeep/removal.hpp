#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgekeep/connectivity.hpp"
#include "edgekeep/graph.hpp"
#include "edgekeep/tree.hpp"

namespace edgekeep {

enum class RemovalKind { vertex, edge, tree };

std::string to_string(RemovalKind kind);

// A set whose deletion keeps G k-edge-connected.
struct RemovalCertificate {
  RemovalKind kind = RemovalKind::vertex;
  VertexSet removed;
  std::optional<int> residual_kprime;  // unset when the residual is the trivial graph
  bool verified = false;

  bool trivial_residual() const { return !residual_kprime.has_value(); }
};

// Recomputes G - removed from scratch and fills residual_kprime / verified.
// Residuals with at most 16 vertices are cross-checked against the
// bipartition routine; a disagreement throws std::logic_error.
RemovalCertificate certify_removal(const Graph& g, int k, RemovalKind kind, const VertexSet& removed);

// Does deleting `removed` leave a k-edge-connected graph? The empty residual
// never qualifies.
bool keeps_k_edge_connected(const Graph& g, int k, const VertexSet& removed);

// Scans vertices in ascending order. Requires κ'(G) >= k.
std::optional<RemovalCertificate> find_removable_vertex(const Graph& g, int k);

// Scans edges in sorted order and deletes both ends. Requires κ'(G) >= k.
std::optional<RemovalCertificate> find_removable_edge(const Graph& g, int k);

// embedding[i] is the image of tree vertex i.
using Embedding = std::vector<Vertex>;

// First copy of T inside G[allowed]: tree vertices are placed in order
// 0..m-1, the root on the allowed vertices in ascending order and every
// other vertex on the unused neighbours of its parent's image in ascending
// order.
std::optional<Embedding> embed_tree(const Graph& g, const TreeSpec& t, const VertexSet& allowed);

// Calls visit on every embedding in the order above until it returns false.
// Returns false when stopped early.
bool for_each_embedding(const Graph& g, const TreeSpec& t, const VertexSet& allowed,
                        const std::function<bool(const Embedding&)>& visit);

VertexSet image_of(const Embedding& e);

// The first image set, in embedding order, whose deletion keeps G
// k-edge-connected. Requires κ'(G) >= k and |V(G)| > m.
std::optional<RemovalCertificate> find_removable_tree(const Graph& g, int k, const TreeSpec& t);

// Every distinct vertex set carrying a copy of T, in first-embedding order.
std::vector<VertexSet> tree_image_sets(const Graph& g, const TreeSpec& t);

struct HCSubgraph {
  VertexSet vertices;  // H
  VertexSet boundary;  // vertices of H with a neighbour outside H
};

// Checks all HCSubgraph invariants for k_target from scratch.
bool is_valid_hc_subgraph(const Graph& g, const HCSubgraph& h, int k_target);

// A k_target-connected subgraph H with |H| > 4 k_target^2 and at most
// 2 k_target^2 boundary vertices, found by repeatedly splitting along a
// minimum vertex cut and shedding low-degree vertices. nullopt means the
// heuristic failed. Requires δ(G) > 4 k_target^2.
std::optional<HCSubgraph> extract_connected_subgraph(const Graph& g, int k_target);

enum class ThomassenStatus { certified, extraction_failed, theorem_violation };

std::string to_string(ThomassenStatus status);

struct ThomassenResult {
  ThomassenStatus status = ThomassenStatus::extraction_failed;
  std::optional<HCSubgraph> subgraph;
  Embedding embedding;  // empty unless a copy of T was placed
  std::optional<RemovalCertificate> certificate;
  std::string detail;
};

// Extracts H with k_target = k + m, places T inside H minus its boundary and
// verifies the residual. A failed verification (or a failed placement, which
// the degree argument rules out) is reported as theorem_violation.
// Requires δ(G) > 4 (k+m)^2 and κ'(G) >= k.
ThomassenResult removable_tree_via_thomassen(const Graph& g, int k, const TreeSpec& t);

struct CutDecomposition {
  VertexSet h1, h2, hbar1, hbar2, d1, d2;

  bool d_bounds_hold = false;   // |D1| <= k-1 and |D2| <= k-1
  bool h_connected = false;     // κ(G[H]) >= k + m
  bool large_h = false;         // |H| > 4 (k+m)^2
  bool dichotomy9 = false;      // H1 \ D1 = ∅ or H2 = ∅
  bool dichotomy10 = false;     // H2 \ D2 = ∅ or H1 = ∅
  bool dichotomy11 = false;     // H1 \ D1 ≠ ∅ or H2 \ D2 ≠ ∅

  bool consistent() const;  // every implication the argument relies on
};

// u must be a minimum edge cut of G - tprime in G's labels (sides partition
// V(G) \ tprime) with value <= k-1, and tprime must avoid h.boundary.
CutDecomposition decompose_cut(const Graph& g, const HCSubgraph& h, const VertexSet& tprime, const EdgeCut& u, int k);

}  // namespace edgekeep
