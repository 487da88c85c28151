#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "edgekeep/graph.hpp"
#include "edgekeep/tree.hpp"

namespace edgekeep {

// Everything needed to regenerate a graph. `model` is "hypotheses",
// "hamiltonian_stack", "bridged_blocks", or a named_instance tag.
struct GenSpec {
  std::string model = "hypotheses";
  int n = 0;
  int k = 1;
  int delta_min = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> params;  // "t", "p" for hamiltonian_stack
};

// t pairwise edge-disjoint Hamiltonian cycles under a random relabelling,
// then every remaining pair joined independently with probability p.
// κ' >= 2t holds by construction and is re-verified. Needs n >= 3, t >= 1,
// 2t < n.
Graph gen_hamiltonian_stack(int n, int t, double extra_edge_prob, std::uint64_t seed);

// A graph with κ' >= k and δ >= delta_min: a Hamiltonian stack with 2t >= k
// (K_n when no such stack fits) augmented with random edges until the degree
// bound holds. Verified before return; throws precondition_error when
// n > delta_min >= k >= 1 fails or the retry budget runs out.
Graph gen_with_hypotheses(int n, int k, int delta_min, std::uint64_t seed, int retry_budget = 64);

// Two gen_with_hypotheses blocks of sizes ~n/2 joined by exactly k
// vertex-disjoint edges, so κ' = k whenever both blocks keep κ' >= k.
// Needs n >= 2 (delta_min + 1).
Graph gen_bridged_blocks(int n, int k, int delta_min, std::uint64_t seed);

// complete:n, complete_bipartite:a,b, cycle:n, path:n, petersen,
// two_cliques_bridged:q,b, tightness:k,m (= complete:k+m).
Graph named_instance(std::string_view tag);

Graph generate(const GenSpec& spec);

// One tree per isomorphism class of order m, 1 <= m <= 10, in order of
// canonical form.
std::vector<TreeSpec> enumerate_trees(int m);

}  // namespace edgekeep
