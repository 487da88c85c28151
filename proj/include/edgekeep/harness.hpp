#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgekeep/generators.hpp"
#include "edgekeep/removal.hpp"

#include "json.hpp"

namespace edgekeep {

enum class Statement { mader_vertex, edge_pair, tree, tightness };

std::string to_string(Statement s);  // "mader-vertex", "edge-pair", "tree", "tightness"
Statement parse_statement(std::string_view text);  // also accepts '_' for '-'

enum class Outcome { witness_found, not_found, theorem_violation_candidate, conjecture_open_datapoint, generation_failed };

std::string to_string(Outcome o);

// Does a theorem guarantee a witness for this statement at δ >= k + m
// (m = 1 for vertices, 2 for edges)? False for the open cells k >= 4, m >= 3.
bool statement_guaranteed(Statement s, int k, int m);

struct CampaignConfig {
  Statement statement = Statement::edge_pair;
  int k_min = 1;
  int k_max = 1;
  int m_min = 1;  // tree and tightness only
  int m_max = 1;
  std::vector<std::string> trees;  // tree specs; empty means every tree of each order m_min..m_max
  int trials = 1;                  // per cell; tightness runs once per tree
  int n_min = 8;
  int n_max = 16;
  GenSpec generator;               // model and params; delta_min acts as an extra floor
  std::uint64_t master_seed = 0;

  void validate() const;  // throws precondition_error
};

struct TrialReport {
  std::string cell;
  Statement statement = Statement::edge_pair;
  int k = 0;
  int m = 0;
  std::string tree;
  int trial = 0;
  std::uint64_t seed = 0;
  int delta_min = 0;
  std::string graph6;
  int n = 0;
  std::size_t edges = 0;
  int min_degree = 0;
  int kprime = 0;
  Outcome outcome = Outcome::not_found;
  std::optional<RemovalCertificate> witness;
  std::string note;
  double wall_ms = 0.0;
};

struct CellSummary {
  std::string expected;  // "witness_found", "not_found", "convention_sensitive" or "none"
  std::map<Outcome, int> counts;
  int trials = 0;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<TrialReport> trials;
  std::map<std::string, CellSummary> per_cell;  // keyed by cell label

  int violations() const;
  int open_datapoints() const;
  int exit_status() const { return violations() > 0 ? 1 : 0; }
};

// Trial seed: derived from (master, k, trial) so that cells sharing k and
// δ see the same graphs.
std::uint64_t trial_seed(std::uint64_t master, int k, int trial);

// Runs every (cell, trial). NotFound results are re-verified exhaustively
// before being reported; a re-verification that contradicts the finder
// throws std::logic_error.
CampaignResult run_campaign(const CampaignConfig& config);

struct TightnessReport {
  int k = 0;
  int m = 0;
  int trees = 0;
  int image_sets = 0;
  bool every_tree_not_found = true;
  std::vector<int> residual_kprimes;  // distinct values seen; empty when every residual is trivial
  bool convention_sensitive = false;  // k = 1: each residual is the trivial graph
  bool pass = false;
};

// Checks every tree of order m and every copy of it in K_{k+m}.
TightnessReport verify_tightness(int k, int m);

nlohmann::json to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CampaignConfig& config);
CampaignConfig campaign_config_from_json(const nlohmann::json& j);  // throws precondition_error
nlohmann::json to_json(const TrialReport& report, bool with_timing = true);
nlohmann::json to_json(const TightnessReport& report);

// {config, trials, summary: {per_cell}}.
nlohmann::json campaign_json(const CampaignResult& result, bool with_timing = true);

}  // namespace edgekeep
