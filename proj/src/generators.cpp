#include "edgekeep/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

#include "edgekeep/connectivity.hpp"
#include "edgekeep/errors.hpp"
#include "edgekeep/rng.hpp"

namespace edgekeep {
namespace {

using Cycle = std::vector<Vertex>;

// Walecki decomposition of K_n, n odd: vertex n-1 plus the zigzag
// Hamiltonian paths i, i+1, i-1, i+2, ... on Z_{n-1}.
std::vector<Cycle> walecki_odd(int n) {
  const int r = (n - 1) / 2;
  const int mod = n - 1;
  std::vector<Cycle> cycles;
  for (int i = 0; i < r; ++i) {
    Cycle c{n - 1, i};
    for (int step = 1; static_cast<int>(c.size()) < n; ++step) {
      c.push_back(((i + step) % mod + mod) % mod);
      if (static_cast<int>(c.size()) < n) c.push_back(((i - step) % mod + mod) % mod);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

// t edge-disjoint Hamiltonian cycles of K_n in fixed labels.
std::vector<Cycle> disjoint_hamiltonian_cycles(int n, int t, Rng& rng) {
  if (n % 2 == 1) {
    auto all = walecki_odd(n);
    rng.shuffle(std::span(all));
    all.resize(static_cast<std::size_t>(t));
    return all;
  }
  // Even n: take t cycles of K_{n-1} and thread the extra vertex n-1 through
  // one edge of each, with all subdivided edges vertex-disjoint.
  auto base = walecki_odd(n - 1);
  rng.shuffle(std::span(base));
  base.resize(static_cast<std::size_t>(t));
  std::vector<std::size_t> choice(base.size());
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(std::size_t)> pick = [&](std::size_t c) {
    if (c == base.size()) return true;
    const Cycle& cyc = base[c];
    const std::size_t len = cyc.size();
    std::size_t offset = rng.below(len);
    for (std::size_t s = 0; s < len; ++s) {
      std::size_t pos = (offset + s) % len;
      Vertex a = cyc[pos];
      Vertex b = cyc[(pos + 1) % len];
      if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
      choice[c] = pos;
      if (pick(c + 1)) return true;
      used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 0;
    }
    return false;
  };
  if (!pick(0)) throw precondition_error("could not pack the requested Hamiltonian cycles");
  for (std::size_t c = 0; c < base.size(); ++c)
    base[c].insert(base[c].begin() + static_cast<std::ptrdiff_t>(choice[c] + 1), n - 1);
  return base;
}

int parse_count(std::string_view s, std::string_view tag) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw precondition_error("bad number '" + std::string(s) + "' in instance tag '" + std::string(tag) + "'");
  return v;
}

std::vector<int> tag_args(std::string_view args, std::string_view tag) {
  std::vector<int> out;
  while (!args.empty()) {
    auto comma = args.find(',');
    out.push_back(parse_count(args.substr(0, comma), tag));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::build(n, edges);
}

// Adds random edges at vertices of degree below delta_min, preferring a
// partner that is itself deficient.
void raise_min_degree(int n, std::vector<std::vector<char>>& adj, int delta_min, Rng& rng) {
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(u)] += adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  while (true) {
    std::vector<Vertex> low;
    for (int v = 0; v < n; ++v)
      if (degree[static_cast<std::size_t>(v)] < delta_min) low.push_back(v);
    if (low.empty()) return;
    Vertex u = low[rng.below(low.size())];
    std::vector<Vertex> partners, low_partners;
    for (int w = 0; w < n; ++w) {
      if (w == u || adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) continue;
      partners.push_back(w);
      if (degree[static_cast<std::size_t>(w)] < delta_min) low_partners.push_back(w);
    }
    const auto& pool = low_partners.empty() ? partners : low_partners;
    Vertex w = pool[rng.below(pool.size())];
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] = 1;
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(w)];
  }
}

Graph from_matrix(int n, const std::vector<std::vector<char>>& adj) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

std::vector<std::vector<char>> stack_matrix(int n, int t, Rng& rng) {
  std::vector<Vertex> relabel(static_cast<std::size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 0);
  rng.shuffle(std::span(relabel));
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Cycle& c : disjoint_hamiltonian_cycles(n, t, rng))
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex a = relabel[static_cast<std::size_t>(c[i])];
      Vertex b = relabel[static_cast<std::size_t>(c[(i + 1) % c.size()])];
      adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }
  return adj;
}

}  // namespace

Graph gen_hamiltonian_stack(int n, int t, double extra_edge_prob, std::uint64_t seed) {
  if (n < 3 || t < 1 || 2 * t >= n)
    throw precondition_error("hamiltonian stack needs n >= 3, t >= 1 and 2t < n (got n=" + std::to_string(n) +
                             ", t=" + std::to_string(t) + ")");
  if (extra_edge_prob < 0.0 || extra_edge_prob > 1.0) throw precondition_error("edge probability outside [0, 1]");
  Rng rng(seed);
  auto adj = stack_matrix(n, t, rng);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] && rng.chance(extra_edge_prob))
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  Graph g = from_matrix(n, adj);
  if (!is_k_edge_connected(g, 2 * t)) throw std::logic_error("hamiltonian stack lost its edge connectivity");
  return g;
}

Graph gen_with_hypotheses(int n, int k, int delta_min, std::uint64_t seed, int retry_budget) {
  if (k < 1 || delta_min < k || n <= delta_min)
    throw precondition_error("need n > delta_min >= k >= 1 (got n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                             ", delta_min=" + std::to_string(delta_min) + ")");
  const int t = (k + 1) / 2;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    Graph g;
    if (2 * t < n && n >= 3) {
      auto adj = stack_matrix(n, t, rng);
      raise_min_degree(n, adj, delta_min, rng);
      g = from_matrix(n, adj);
    } else {
      g = complete_graph(n);
    }
    if (g.min_degree() >= delta_min && is_k_edge_connected(g, k)) return g;
  }
  throw precondition_error("retry budget exhausted generating a graph with the requested hypotheses");
}

Graph gen_bridged_blocks(int n, int k, int delta_min, std::uint64_t seed) {
  if (k < 1 || delta_min < k || n < 2 * (delta_min + 1))
    throw precondition_error("bridged blocks need n >= 2 (delta_min + 1) and delta_min >= k >= 1");
  Rng rng(seed);
  const int left = n / 2;
  const int right = n - left;
  if (k > left) throw precondition_error("bridged blocks need k vertex-disjoint bridges");
  Graph a = gen_with_hypotheses(left, k, delta_min, rng.next());
  Graph b = gen_with_hypotheses(right, k, delta_min, rng.next());
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + left, e.v + left);
  std::vector<Vertex> ends_a(static_cast<std::size_t>(left)), ends_b(static_cast<std::size_t>(right));
  std::iota(ends_a.begin(), ends_a.end(), 0);
  std::iota(ends_b.begin(), ends_b.end(), left);
  rng.shuffle(std::span(ends_a));
  rng.shuffle(std::span(ends_b));
  for (int i = 0; i < k; ++i) edges.emplace_back(ends_a[static_cast<std::size_t>(i)], ends_b[static_cast<std::size_t>(i)]);
  Graph g = Graph::build(n, edges);
  if (g.min_degree() < delta_min || !is_k_edge_connected(g, k))
    throw std::logic_error("bridged blocks failed verification");
  return g;
}

Graph named_instance(std::string_view tag) {
  auto colon = tag.find(':');
  std::string_view kind = tag.substr(0, colon);
  auto args = colon == std::string_view::npos ? std::vector<int>{} : tag_args(tag.substr(colon + 1), tag);
  auto want = [&](std::size_t count) {
    if (args.size() != count)
      throw precondition_error("instance '" + std::string(kind) + "' takes " + std::to_string(count) + " parameter(s)");
    for (int a : args)
      if (a < 0 || a > 100000) throw precondition_error("instance parameter out of range");
  };
  if (kind == "complete") {
    want(1);
    return complete_graph(args[0]);
  }
  if (kind == "complete_bipartite") {
    want(2);
    std::vector<Edge> edges;
    for (int i = 0; i < args[0]; ++i)
      for (int j = 0; j < args[1]; ++j) edges.emplace_back(i, args[0] + j);
    return Graph::build(args[0] + args[1], edges);
  }
  if (kind == "cycle" || kind == "path") {
    want(1);
    const int n = args[0];
    if (kind == "cycle" && n < 3) throw precondition_error("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (kind == "cycle") edges.emplace_back(0, n - 1);
    return Graph::build(n, edges);
  }
  if (kind == "petersen") {
    want(0);
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::build(10, edges);
  }
  if (kind == "two_cliques_bridged") {
    want(2);
    const int q = args[0];
    const int b = args[1];
    if (b > q) throw precondition_error("at most q bridges fit between two K_q");
    std::vector<Edge> edges;
    for (int side = 0; side < 2; ++side)
      for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) edges.emplace_back(side * q + i, side * q + j);
    for (int i = 0; i < b; ++i) edges.emplace_back(i, q + i);
    return Graph::build(2 * q, edges);
  }
  if (kind == "tightness") {
    want(2);
    return complete_graph(args[0] + args[1]);
  }
  throw precondition_error("unknown instance tag '" + std::string(tag) + "'");
}

Graph generate(const GenSpec& spec) {
  auto param = [&](const char* name, double fallback) {
    auto it = spec.params.find(name);
    return it == spec.params.end() ? fallback : it->second;
  };
  if (spec.model == "hypotheses") return gen_with_hypotheses(spec.n, spec.k, spec.delta_min, spec.seed);
  if (spec.model == "bridged_blocks") return gen_bridged_blocks(spec.n, spec.k, spec.delta_min, spec.seed);
  if (spec.model == "hamiltonian_stack")
    return gen_hamiltonian_stack(spec.n, static_cast<int>(param("t", (spec.k + 1) / 2)), param("p", 0.0), spec.seed);
  return named_instance(spec.model);
}

std::vector<TreeSpec> enumerate_trees(int m) {
  if (m < 1 || m > 10) throw precondition_error("tree enumeration supports orders 1..10");
  // Grow every class of order j into order j+1 by attaching a leaf anywhere.
  std::vector<TreeSpec> level{TreeSpec::path(1)};
  for (int j = 1; j < m; ++j) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, TreeSpec>> next;
    for (const TreeSpec& t : level)
      for (Vertex v = 0; v < j; ++v) {
        std::vector<Vertex> parents = t.parents();
        parents.push_back(v);
        TreeSpec grown = TreeSpec::from_parents(std::move(parents));
        std::string key = grown.canonical_form();
        if (seen.insert(key).second) next.emplace_back(std::move(key), std::move(grown));
      }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& entry : next) level.push_back(std::move(entry.second));
  }
  return level;
}

}  // namespace edgekeep
