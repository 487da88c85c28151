#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "edgekeep/connectivity.hpp"
#include "edgekeep/errors.hpp"
#include "edgekeep/generators.hpp"
#include "edgekeep/graph_io.hpp"
#include "edgekeep/harness.hpp"
#include "edgekeep/removal.hpp"

namespace edgekeep::cli {
namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load(const std::string& path, const std::string& format) {
  try {
    if (format.empty()) return read_graph_file(path);
    return read_graph_file(path, parse_format_name(format));
  } catch (const parse_error& e) {
    throw parse_error(0, path + ": " + e.what());
  }
}

std::map<std::string, double> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Usage("--param expects key=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      double v = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out[item.substr(0, eq)] = v;
    } catch (const std::exception&) {
      throw Usage("--param value is not a number: '" + item + "'");
    }
  }
  return out;
}

void write_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Usage("cannot write " + path);
  f << j.dump(2) << "\n";
}

void print_certificate(const std::optional<RemovalCertificate>& c, std::ostream& out) {
  if (!c) {
    out << "not found\n";
    return;
  }
  out << "found " << to_string(c->kind) << " removed";
  for (Vertex v : c->removed) out << ' ' << v;
  if (c->residual_kprime)
    out << " residual_kprime " << *c->residual_kprime << "\n";
  else
    out << " residual trivial\n";
}

void print_summary(const CampaignResult& r, std::ostream& out, std::ostream& err) {
  for (const auto& [label, s] : r.per_cell) {
    out << "cell " << label << ": expected " << s.expected << ";";
    for (const auto& [o, n] : s.counts) out << ' ' << to_string(o) << ' ' << n;
    out << " (trials " << s.trials << ")\n";
  }
  for (const auto& t : r.trials) {
    if (t.outcome != Outcome::theorem_violation_candidate && t.outcome != Outcome::conjecture_open_datapoint) continue;
    err << (t.outcome == Outcome::theorem_violation_candidate ? "VIOLATION" : "DATAPOINT") << " statement="
        << to_string(t.statement) << " k=" << t.k;
    if (!t.tree.empty()) err << " m=" << t.m << " tree=" << t.tree;
    err << " seed=" << t.seed << " n=" << t.n << " delta_min=" << t.delta_min << " model=" << r.config.generator.model
        << " master_seed=" << r.config.master_seed << " trial=" << t.trial << " graph6=" << t.graph6 << "\n";
  }
  out << "violations " << r.violations() << "\n";
}

int analyze(const std::string& file, const std::string& format, bool json, std::ostream& out) {
  Graph g = load(file, format);
  auto rep = connectivity_report(g);
  if (json) {
    out << nlohmann::json{{"n", rep.n},
                          {"edges", rep.edge_count},
                          {"min_degree", rep.min_degree},
                          {"edge_connectivity", rep.edge_connectivity ? nlohmann::json(*rep.edge_connectivity) : nlohmann::json()},
                          {"vertex_connectivity", rep.vertex_connectivity}}
               .dump()
        << "\n";
    return 0;
  }
  out << "n " << rep.n << "\nedges " << rep.edge_count << "\nmin_degree " << rep.min_degree << "\nedge_connectivity ";
  if (rep.edge_connectivity)
    out << *rep.edge_connectivity;
  else
    out << "n/a";
  out << "\nvertex_connectivity " << rep.vertex_connectivity << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-connectivity and removable-subgraph toolkit", "edgekeep"};
  app.require_subcommand(1);

  std::string file, format;
  bool json_out = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Print n, |E|, minimum degree, edge and vertex connectivity");
  analyze_cmd->add_option("file", file, "Graph file")->required();
  analyze_cmd->add_option("--format", format, "edgelist or graph6 (default: by extension)");
  analyze_cmd->add_flag("--json", json_out, "Emit JSON");

  int k = 1;
  bool want_vertex = false, want_edge = false;
  std::string tree_text;
  auto* find_cmd = app.add_subcommand("find-removable", "Search for a removable vertex, edge or tree copy");
  find_cmd->add_option("--k", k, "Target edge connectivity")->required();
  auto* fv = find_cmd->add_flag("--vertex", want_vertex);
  auto* fe = find_cmd->add_flag("--edge", want_edge);
  auto* ft = find_cmd->add_option("--tree", tree_text, "Tree spec, e.g. path:3 or spider:1,2");
  fv->excludes(fe)->excludes(ft);
  fe->excludes(ft);
  find_cmd->add_option("file", file, "Graph file")->required();
  find_cmd->add_option("--format", format);

  GenSpec gen;
  int delta = -1;
  std::string out_path;
  std::vector<std::string> params;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("--model", gen.model, "hypotheses, hamiltonian_stack, bridged_blocks or a named instance tag");
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--delta", delta, "Minimum degree (default: k)");
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--param", params, "Model parameter key=value (t, p)");
  gen_cmd->add_option("--out", out_path);
  gen_cmd->add_option("--format", format);

  std::string config_path, statement, json_path;
  int k_max = -1, m = 1, m_max = -1, trials = 1, n_min = 8, n_max = 16;
  std::vector<std::string> trees;
  std::uint64_t seed = 0;
  std::string model = "hypotheses";
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
  verify_cmd->add_option("--config", config_path, "JSON campaign config");
  auto* st = verify_cmd->add_option("--statement", statement, "mader-vertex, edge-pair, tree or tightness");
  verify_cmd->add_option("--k", k);
  verify_cmd->add_option("--k-max", k_max);
  auto* vm = verify_cmd->add_option("--m", m);
  verify_cmd->add_option("--m-max", m_max);
  verify_cmd->add_option("--tree", trees, "Tree spec (repeatable); overrides --m")->excludes(vm);
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--n-min", n_min);
  verify_cmd->add_option("--n-max", n_max);
  verify_cmd->add_option("--model", model);
  verify_cmd->add_option("--param", params);
  verify_cmd->add_option("--json", json_path, "Write the full report (- for stdout)");

  int budget = 1;
  auto* cx_cmd = app.add_subcommand("counterexample", "Search for tree-removal counterexamples at minimum degree k+m");
  cx_cmd->add_option("--k", k)->required();
  cx_cmd->add_option("--m", m)->required();
  cx_cmd->add_option("--budget", budget, "Graphs to try")->required();
  cx_cmd->add_option("--seed", seed)->required();
  cx_cmd->add_option("--json", json_path);

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return analyze(file, format, json_out, out);

    if (*find_cmd) {
      Graph g = load(file, format);
      if (want_vertex) print_certificate(find_removable_vertex(g, k), out);
      else if (want_edge) print_certificate(find_removable_edge(g, k), out);
      else if (!tree_text.empty()) print_certificate(find_removable_tree(g, k, parse_tree_spec(tree_text)), out);
      else throw Usage("choose one of --vertex, --edge or --tree");
      return 0;
    }

    if (*gen_cmd) {
      gen.delta_min = delta < 0 ? gen.k : delta;
      gen.params = parse_params(params);
      Graph g = generate(gen);
      GraphFormat fmt = format.empty() ? GraphFormat::edge_list : parse_format_name(format);
      if (out_path.empty()) {
        out << (fmt == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edge_list(g));
      } else {
        write_graph_file(out_path, g, fmt);
      }
      return 0;
    }

    if (*verify_cmd) {
      CampaignConfig c;
      if (!config_path.empty()) {
        if (*st) throw Usage("--config cannot be combined with --statement");
        std::ifstream f(config_path);
        if (!f) throw Usage("cannot open " + config_path);
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(f);
        } catch (const nlohmann::json::parse_error& e) {
          throw Usage(config_path + ": " + e.what());
        }
        c = campaign_config_from_json(j);
      } else {
        if (statement.empty()) throw Usage("verify needs --statement or --config");
        c.statement = parse_statement(statement);
        c.k_min = k;
        c.k_max = k_max < 0 ? k : k_max;
        c.m_min = m;
        c.m_max = m_max < 0 ? m : m_max;
        c.trees = trees;
        c.trials = trials;
        c.n_min = n_min;
        c.n_max = n_max;
        c.generator.model = model;
        c.generator.params = parse_params(params);
        c.master_seed = seed;
      }
      auto result = run_campaign(c);
      print_summary(result, out, err);
      if (c.statement == Statement::tightness && c.trees.empty())
        for (int kk = c.k_min; kk <= c.k_max; ++kk)
          for (int mm = c.m_min; mm <= c.m_max; ++mm) {
            if (kk + mm < 2) continue;
            auto t = verify_tightness(kk, mm);
            out << "tightness k=" << kk << " m=" << mm << ": " << (t.pass ? "pass" : "FAIL")
                << (t.convention_sensitive ? " (convention-sensitive: residual is the trivial graph)" : "") << "\n";
          }
      if (!json_path.empty()) write_json(campaign_json(result), json_path, out);
      return result.exit_status();
    }

    if (*cx_cmd) {
      if (budget < 1) throw Usage("--budget must be at least 1");
      CampaignConfig c;
      c.statement = Statement::tree;
      c.k_min = c.k_max = k;
      c.m_min = c.m_max = m;
      c.trials = budget;
      c.n_min = k + m + 1;
      c.n_max = std::max(16, k + m + 1);
      c.master_seed = seed;
      auto result = run_campaign(c);
      print_summary(result, out, err);
      out << "open_datapoints " << result.open_datapoints() << "\n";
      if (!json_path.empty()) write_json(campaign_json(result), json_path, out);
      return result.violations() + result.open_datapoints() > 0 ? 1 : 0;
    }
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const limit_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace edgekeep::cli
