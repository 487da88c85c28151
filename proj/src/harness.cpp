#include "edgekeep/harness.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "edgekeep/connectivity.hpp"
#include "edgekeep/errors.hpp"
#include "edgekeep/graph_io.hpp"
#include "edgekeep/rng.hpp"

namespace edgekeep {

std::string to_string(Statement s) {
  switch (s) {
    case Statement::mader_vertex: return "mader-vertex";
    case Statement::edge_pair: return "edge-pair";
    case Statement::tree: return "tree";
    case Statement::tightness: return "tightness";
  }
  return "?";
}

Statement parse_statement(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == '_') c = '-';
  for (Statement st : {Statement::mader_vertex, Statement::edge_pair, Statement::tree, Statement::tightness})
    if (s == to_string(st)) return st;
  throw precondition_error("unknown statement '" + std::string(text) + "'");
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::witness_found: return "witness_found";
    case Outcome::not_found: return "not_found";
    case Outcome::theorem_violation_candidate: return "theorem_violation_candidate";
    case Outcome::conjecture_open_datapoint: return "conjecture_open_datapoint";
    case Outcome::generation_failed: return "generation_failed";
  }
  return "?";
}

bool statement_guaranteed(Statement s, int k, int m) {
  switch (s) {
    case Statement::mader_vertex:
    case Statement::edge_pair: return true;
    case Statement::tree: return k <= 3 || m <= 2;
    case Statement::tightness: return false;
  }
  return false;
}

void CampaignConfig::validate() const {
  if (k_min < 1 || k_max < k_min) throw precondition_error("k range must be nonempty and start at 1 or more");
  if (trials < 1) throw precondition_error("trials must be at least 1");
  if (statement == Statement::tree || statement == Statement::tightness) {
    if (trees.empty() && (m_min < 1 || m_max < m_min || m_max > 10))
      throw precondition_error("m range must be nonempty within 1..10");
  }
  if (statement != Statement::tightness && (n_min < 2 || n_max < n_min))
    throw precondition_error("n range must be nonempty with n >= 2");
}

int CampaignResult::violations() const {
  int c = 0;
  for (const auto& t : trials) c += t.outcome == Outcome::theorem_violation_candidate;
  return c;
}

int CampaignResult::open_datapoints() const {
  int c = 0;
  for (const auto& t : trials) c += t.outcome == Outcome::conjecture_open_datapoint;
  return c;
}

std::uint64_t trial_seed(std::uint64_t master, int k, int trial) {
  return derive_seed(derive_seed(master, static_cast<std::uint64_t>(k)), static_cast<std::uint64_t>(trial));
}

namespace {

struct Cell {
  int k;
  int m;
  std::optional<TreeSpec> tree;
  std::string tree_text;
  std::string label;
};

std::vector<Cell> cells_of(const CampaignConfig& c) {
  std::vector<Cell> out;
  for (int k = c.k_min; k <= c.k_max; ++k) {
    if (c.statement == Statement::mader_vertex || c.statement == Statement::edge_pair) {
      out.push_back({k, c.statement == Statement::mader_vertex ? 1 : 2, std::nullopt, "", "k=" + std::to_string(k)});
      continue;
    }
    auto add = [&](const TreeSpec& t, const std::string& text) {
      out.push_back({k, t.order(), t, text,
                     "k=" + std::to_string(k) + " m=" + std::to_string(t.order()) + " tree=" + text});
    };
    if (!c.trees.empty()) {
      for (const auto& text : c.trees) add(parse_tree_spec(text), text);
    } else {
      for (int m = c.m_min; m <= c.m_max; ++m)
        for (const auto& t : enumerate_trees(m)) add(t, t.label());
    }
  }
  return out;
}

int required_degree(Statement s, int k, int m) {
  switch (s) {
    case Statement::mader_vertex: return k + 1;
    case Statement::edge_pair: return k + 2;
    default: return k + m;
  }
}

int exact_edge_connectivity(const Graph& g) {
  if (g.order() <= default_exhaustive_limit) return bipartition_edge_connectivity(g);
  return edge_connectivity_value(g);
}

bool residual_ok(const Graph& g, int k, const VertexSet& removed) {
  if (static_cast<int>(removed.size()) >= g.order()) return false;
  Graph r = delete_vertices(g, removed).graph;
  if (r.order() == 1) return k <= 1;
  return exact_edge_connectivity(r) >= k;
}

// Confirms a NotFound independently of the embedding search: checks the
// hypotheses and every candidate vertex set, enumerated as subsets.
void reverify_not_found(const Graph& g, int k, int delta, const std::optional<TreeSpec>& tree, int m) {
  if (g.min_degree() < delta || exact_edge_connectivity(g) < k)
    throw std::logic_error("instance does not satisfy the generated hypotheses");
  const int n = g.order();
  std::vector<Vertex> pick(static_cast<std::size_t>(m));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == m) {
      VertexSet s(pick);
      bool carries = tree ? embed_tree(g, *tree, s).has_value() : (m == 1 || g.has_edge(pick[0], pick[1]));
      if (carries && residual_ok(g, k, s))
        throw std::logic_error("re-scan found a removable set the finder missed: " +
                               [&] {
                                 std::ostringstream os;
                                 os << s;
                                 return os.str();
                               }());
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
}

Graph complete_graph(int n) { return named_instance("complete:" + std::to_string(n)); }

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config) {
  config.validate();
  CampaignResult result;
  result.config = config;
  for (const Cell& cell : cells_of(config)) {
    CellSummary& summary = result.per_cell[cell.label];
    if (config.statement == Statement::tightness)
      summary.expected = cell.k == 1 ? "convention_sensitive" : "not_found";
    else
      summary.expected = statement_guaranteed(config.statement, cell.k, cell.m) ? "witness_found" : "none";

    const int runs = config.statement == Statement::tightness ? 1 : config.trials;
    for (int trial = 0; trial < runs; ++trial) {
      auto start = std::chrono::steady_clock::now();
      TrialReport r;
      r.cell = cell.label;
      r.statement = config.statement;
      r.k = cell.k;
      r.m = cell.m;
      r.tree = cell.tree_text;
      r.trial = trial;

      std::optional<Graph> g;
      if (config.statement == Statement::tightness) {
        r.delta_min = cell.k + cell.m - 1;
        g = complete_graph(cell.k + cell.m);
      } else {
        r.seed = trial_seed(config.master_seed, cell.k, trial);
        r.delta_min = std::max(required_degree(config.statement, cell.k, cell.m), config.generator.delta_min);
        GenSpec spec = config.generator;
        spec.k = cell.k;
        spec.delta_min = r.delta_min;
        spec.seed = r.seed;
        const int lo = std::max(config.n_min, r.delta_min + 1);
        const int hi = std::max(config.n_max, lo);
        Rng pick(derive_seed(r.seed, 0x6e));
        spec.n = lo + static_cast<int>(pick.below(static_cast<std::uint64_t>(hi - lo + 1)));
        try {
          g = generate(spec);
        } catch (const precondition_error& e) {
          r.outcome = Outcome::generation_failed;
          r.note = e.what();
        }
        if (g && (g->min_degree() < r.delta_min || !is_k_edge_connected(*g, cell.k))) {
          r.outcome = Outcome::generation_failed;
          r.note = "generated graph misses the hypotheses";
          g.reset();
        }
      }

      if (g) {
        r.graph6 = to_graph6(*g);
        r.n = g->order();
        r.edges = g->edge_count();
        r.min_degree = g->min_degree();
        r.kprime = edge_connectivity_value(*g);
        std::optional<RemovalCertificate> found;
        switch (config.statement) {
          case Statement::mader_vertex: found = find_removable_vertex(*g, cell.k); break;
          case Statement::edge_pair: found = find_removable_edge(*g, cell.k); break;
          default: found = find_removable_tree(*g, cell.k, *cell.tree); break;
        }
        if (found) {
          r.outcome = Outcome::witness_found;
          r.witness = found;
          if (config.statement == Statement::tightness) {
            if (!found->trivial_residual())
              throw std::logic_error("complete graph K_{k+m} kept k-edge-connectivity after removing a tree");
            r.note = "residual is the trivial graph; counted as 1-edge-connected by convention";
          }
        } else {
          reverify_not_found(*g, cell.k, r.delta_min, cell.tree, cell.m);
          if (config.statement == Statement::tightness) {
            r.outcome = Outcome::not_found;
          } else {
            const long long thomassen = 4LL * (cell.k + cell.m) * (cell.k + cell.m);
            bool guaranteed = statement_guaranteed(config.statement, cell.k, cell.m) || r.min_degree > thomassen;
            r.outcome = guaranteed ? Outcome::theorem_violation_candidate : Outcome::conjecture_open_datapoint;
            r.note = "no removable copy; hypotheses and all candidate sets re-verified";
          }
        }
      }
      r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      ++summary.counts[r.outcome];
      ++summary.trials;
      result.trials.push_back(std::move(r));
    }
  }
  return result;
}

TightnessReport verify_tightness(int k, int m) {
  if (k < 1 || m < 1 || k + m < 2) throw precondition_error("tightness needs k >= 1, m >= 1 and k + m >= 2");
  if (m > 10) throw limit_error("tree enumeration stops at order 10");
  TightnessReport rep;
  rep.k = k;
  rep.m = m;
  rep.convention_sensitive = k == 1;
  const Graph g = complete_graph(k + m);
  std::set<int> values;
  bool every_trivial = true;
  for (const auto& t : enumerate_trees(m)) {
    ++rep.trees;
    for (const auto& s : tree_image_sets(g, t)) {
      ++rep.image_sets;
      auto cert = certify_removal(g, k, RemovalKind::tree, s);
      if (cert.residual_kprime) {
        values.insert(*cert.residual_kprime);
        every_trivial = false;
      }
      if (cert.verified && !rep.convention_sensitive) rep.every_tree_not_found = false;
    }
    if (!rep.convention_sensitive && find_removable_tree(g, k, t)) rep.every_tree_not_found = false;
  }
  rep.residual_kprimes.assign(values.begin(), values.end());
  if (rep.convention_sensitive)
    rep.pass = every_trivial && rep.image_sets > 0;
  else
    rep.pass = rep.every_tree_not_found && rep.image_sets > 0 && rep.residual_kprimes == std::vector<int>{k - 1};
  return rep;
}

nlohmann::json to_json(const GenSpec& spec) {
  return {{"model", spec.model}, {"n", spec.n},       {"k", spec.k},
          {"delta_min", spec.delta_min}, {"seed", spec.seed}, {"params", spec.params}};
}

namespace {

void only_keys(const nlohmann::json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw precondition_error(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw precondition_error("unknown field '" + key + "' in " + what);
  }
}

std::pair<int, int> int_range(const nlohmann::json& j, const char* name) {
  if (j.is_number_integer()) return {j.get<int>(), j.get<int>()};
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return {j[0].get<int>(), j[1].get<int>()};
  throw precondition_error(std::string("field '") + name + "' must be an integer or [min, max]");
}

}  // namespace

GenSpec gen_spec_from_json(const nlohmann::json& j) {
  only_keys(j, {"model", "n", "k", "delta_min", "seed", "params"}, "generator");
  GenSpec s;
  try {
    s.model = j.value("model", s.model);
    s.n = j.value("n", s.n);
    s.k = j.value("k", s.k);
    s.delta_min = j.value("delta_min", s.delta_min);
    s.seed = j.value("seed", s.seed);
    if (j.contains("params")) s.params = j.at("params").get<std::map<std::string, double>>();
  } catch (const nlohmann::json::exception& e) {
    throw precondition_error(std::string("generator: ") + e.what());
  }
  return s;
}

nlohmann::json to_json(const CampaignConfig& c) {
  nlohmann::json j{{"statement", to_string(c.statement)},
                   {"k", {c.k_min, c.k_max}},
                   {"trials", c.trials},
                   {"generator", to_json(c.generator)},
                   {"master_seed", c.master_seed}};
  if (c.statement == Statement::tree || c.statement == Statement::tightness) {
    if (c.trees.empty())
      j["m"] = {c.m_min, c.m_max};
    else
      j["trees"] = c.trees;
  }
  if (c.statement != Statement::tightness) j["n"] = {c.n_min, c.n_max};
  return j;
}

CampaignConfig campaign_config_from_json(const nlohmann::json& j) {
  only_keys(j, {"statement", "k", "m", "trees", "trials", "n", "generator", "master_seed"}, "campaign config");
  CampaignConfig c;
  try {
    if (!j.contains("statement") || !j.contains("k")) throw precondition_error("campaign config needs 'statement' and 'k'");
    c.statement = parse_statement(j.at("statement").get<std::string>());
    std::tie(c.k_min, c.k_max) = int_range(j.at("k"), "k");
    if (j.contains("m")) std::tie(c.m_min, c.m_max) = int_range(j.at("m"), "m");
    if (j.contains("trees")) c.trees = j.at("trees").get<std::vector<std::string>>();
    if (j.contains("n")) std::tie(c.n_min, c.n_max) = int_range(j.at("n"), "n");
    c.trials = j.value("trials", c.trials);
    c.master_seed = j.value("master_seed", c.master_seed);
    if (j.contains("generator")) c.generator = gen_spec_from_json(j.at("generator"));
  } catch (const nlohmann::json::exception& e) {
    throw precondition_error(std::string("campaign config: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json to_json(const TrialReport& r, bool with_timing) {
  nlohmann::json j{{"cell", r.cell},         {"statement", to_string(r.statement)},
                   {"k", r.k},               {"trial", r.trial},
                   {"seed", r.seed},         {"delta_min", r.delta_min},
                   {"graph6", r.graph6},     {"n", r.n},
                   {"edges", r.edges},       {"min_degree", r.min_degree},
                   {"kprime", r.kprime},     {"outcome", to_string(r.outcome)}};
  if (r.statement == Statement::tree || r.statement == Statement::tightness) {
    j["m"] = r.m;
    j["tree"] = r.tree;
  }
  if (r.witness) {
    j["witness"] = {{"kind", to_string(r.witness->kind)},
                    {"removed", r.witness->removed.ids()},
                    {"residual_kprime", r.witness->residual_kprime ? nlohmann::json(*r.witness->residual_kprime) : nlohmann::json()},
                    {"verified", r.witness->verified}};
  } else {
    j["witness"] = nullptr;
  }
  if (!r.note.empty()) j["note"] = r.note;
  if (with_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

nlohmann::json to_json(const TightnessReport& r) {
  return {{"k", r.k},
          {"m", r.m},
          {"trees", r.trees},
          {"image_sets", r.image_sets},
          {"every_tree_not_found", r.every_tree_not_found},
          {"residual_kprimes", r.residual_kprimes},
          {"convention_sensitive", r.convention_sensitive},
          {"pass", r.pass}};
}

nlohmann::json campaign_json(const CampaignResult& result, bool with_timing) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : result.trials) trials.push_back(to_json(t, with_timing));
  nlohmann::json cells = nlohmann::json::object();
  for (const auto& [label, s] : result.per_cell) {
    auto count = [&](Outcome o) {
      auto it = s.counts.find(o);
      return it == s.counts.end() ? 0 : it->second;
    };
    cells[label] = {{"expected", s.expected},
                    {"trials", s.trials},
                    {"witness_found", count(Outcome::witness_found)},
                    {"not_found", count(Outcome::not_found) + count(Outcome::conjecture_open_datapoint)},
                    {"violations", count(Outcome::theorem_violation_candidate)},
                    {"conjecture_open_datapoint", count(Outcome::conjecture_open_datapoint)},
                    {"generation_failed", count(Outcome::generation_failed)}};
  }
  return {{"config", to_json(result.config)},
          {"trials", std::move(trials)},
          {"summary", {{"per_cell", std::move(cells)}, {"violations", result.violations()}}}};
}

}  // namespace edgekeep
