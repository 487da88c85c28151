#include "edgekeep/tree.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <string>

#include "edgekeep/errors.hpp"
#include "edgekeep/graph_io.hpp"

namespace edgekeep {
namespace {

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::vector<Vertex>> adjacency(int m, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(m));
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

std::string generic_label(const TreeSpec& t) {
  const int m = t.order();
  if (m <= 2) return "path:" + std::to_string(m);
  auto edges = t.edges();
  auto adj = adjacency(m, edges);
  auto deg = [&](Vertex v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); };
  std::vector<Vertex> branch, inner;
  for (Vertex v = 0; v < m; ++v) {
    if (deg(v) >= 3) branch.push_back(v);
    if (deg(v) >= 2) inner.push_back(v);
  }
  if (branch.empty()) return "path:" + std::to_string(m);
  if (deg(branch[0]) == m - 1) return "star:" + std::to_string(m);
  if (branch.size() == 1) {
    std::vector<int> legs;
    for (Vertex w : adj[static_cast<std::size_t>(branch[0])]) {
      int len = 1;
      for (Vertex prev = branch[0], cur = w; deg(cur) == 2; ++len) {
        Vertex next = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1] : adj[static_cast<std::size_t>(cur)][0];
        prev = cur;
        cur = next;
      }
      legs.push_back(len);
    }
    std::sort(legs.rbegin(), legs.rend());
    return "spider:" + join(legs);
  }
  // Caterpillar: the non-leaves induce a path.
  std::vector<int> inner_deg(static_cast<std::size_t>(m), 0);
  Vertex end = -1;
  for (Vertex v : inner) {
    for (Vertex w : adj[static_cast<std::size_t>(v)]) inner_deg[static_cast<std::size_t>(v)] += deg(w) >= 2;
    if (inner_deg[static_cast<std::size_t>(v)] > 2) return "prufer:" + join(t.prufer_code());
    if (inner_deg[static_cast<std::size_t>(v)] <= 1 && end < 0) end = v;
  }
  std::vector<int> leaves;
  for (Vertex prev = -1, cur = end; cur >= 0;) {
    Vertex next = -1;
    int count = 0;
    for (Vertex w : adj[static_cast<std::size_t>(cur)]) {
      if (deg(w) == 1) ++count;
      else if (w != prev) next = w;
    }
    leaves.push_back(count);
    prev = cur;
    cur = next;
  }
  return "caterpillar:" + join(leaves);
}

std::string encode_rooted(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex from) {
  std::vector<std::string> kids;
  for (Vertex w : adj[static_cast<std::size_t>(v)])
    if (w != from) kids.push_back(encode_rooted(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ')';
  return s;
}

std::vector<int> parse_ints(std::string_view args, std::string_view spec) {
  std::vector<int> out;
  if (args.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = args.find(',', start);
    std::string_view field = args.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw parse_error(0, "bad integer '" + std::string(field) + "' in tree spec '" + std::string(spec) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

TreeSpec TreeSpec::from_parents(std::vector<Vertex> parents, std::string label) {
  if (parents.empty()) throw precondition_error("a tree needs at least one vertex");
  if (parents[0] != -1) throw precondition_error("tree root must have parent -1");
  for (std::size_t i = 1; i < parents.size(); ++i)
    if (parents[i] < 0 || parents[i] >= static_cast<Vertex>(i))
      throw precondition_error("parent of tree vertex " + std::to_string(i) + " must precede it");
  TreeSpec t;
  t.parents_ = std::move(parents);
  t.label_ = label.empty() ? generic_label(t) : std::move(label);
  return t;
}

TreeSpec TreeSpec::from_edges(int m, std::span<const Edge> edges, std::string label) {
  if (m < 1) throw precondition_error("a tree needs at least one vertex");
  if (edges.size() != static_cast<std::size_t>(m - 1))
    throw precondition_error("a tree on " + std::to_string(m) + " vertices has " + std::to_string(m - 1) + " edges");
  for (const Edge& e : edges)
    if (e.u < 0 || e.v >= m || e.u == e.v) throw precondition_error("tree edge out of range");
  auto adj = adjacency(m, edges);
  std::vector<Vertex> new_id(static_cast<std::size_t>(m), -1);
  std::vector<Vertex> order{0};
  std::vector<Vertex> parents{-1};
  new_id[0] = 0;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    Vertex u = order[qi];
    for (Vertex w : adj[static_cast<std::size_t>(u)]) {
      if (new_id[static_cast<std::size_t>(w)] >= 0) continue;
      new_id[static_cast<std::size_t>(w)] = static_cast<Vertex>(order.size());
      order.push_back(w);
      parents.push_back(new_id[static_cast<std::size_t>(u)]);
    }
  }
  if (order.size() != static_cast<std::size_t>(m)) throw precondition_error("tree edges do not connect every vertex");
  return from_parents(std::move(parents), std::move(label));
}

TreeSpec TreeSpec::path(int m) {
  if (m < 1) throw precondition_error("path order must be positive");
  std::vector<Vertex> p(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i - 1;
  return from_parents(std::move(p), "path:" + std::to_string(m));
}

TreeSpec TreeSpec::star(int m) {
  if (m < 1) throw precondition_error("star order must be positive");
  std::vector<Vertex> p(static_cast<std::size_t>(m), 0);
  p[0] = -1;
  return from_parents(std::move(p), "star:" + std::to_string(m));
}

TreeSpec TreeSpec::spider(std::span<const int> legs) {
  if (legs.empty()) throw precondition_error("a spider needs at least one leg");
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    if (len < 1) throw precondition_error("spider legs must have positive length");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return from_edges(next, edges, "spider:" + join(legs));
}

TreeSpec TreeSpec::caterpillar(std::span<const int> leaves) {
  if (leaves.empty()) throw precondition_error("a caterpillar needs a spine");
  const int spine = static_cast<int>(leaves.size());
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    if (leaves[static_cast<std::size_t>(i)] < 0) throw precondition_error("leaf counts must be nonnegative");
    for (int j = 0; j < leaves[static_cast<std::size_t>(i)]; ++j) edges.emplace_back(i, next++);
  }
  return from_edges(next, edges, "caterpillar:" + join(leaves));
}

TreeSpec TreeSpec::from_prufer(std::span<const int> code) {
  const int m = static_cast<int>(code.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(m), 1);
  for (int x : code) {
    if (x < 0 || x >= m) throw precondition_error("Prufer label out of range 0.." + std::to_string(m - 1));
    ++degree[static_cast<std::size_t>(x)];
  }
  std::vector<Edge> edges;
  for (int x : code) {
    Vertex leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(x)];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < m; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return from_edges(m, edges, "prufer:" + join(code));
}

std::vector<Edge> TreeSpec::edges() const {
  std::vector<Edge> out;
  for (Vertex i = 1; i < order(); ++i) out.emplace_back(parent(i), i);
  std::sort(out.begin(), out.end());
  return out;
}

Graph TreeSpec::graph() const { return Graph::build(order(), edges()); }

std::vector<int> TreeSpec::prufer_code() const {
  const int m = order();
  if (m <= 2) return {};
  auto edge_list = edges();
  auto adj = adjacency(m, edge_list);
  std::vector<int> degree(static_cast<std::size_t>(m));
  for (Vertex v = 0; v < m; ++v) degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  std::vector<char> gone(static_cast<std::size_t>(m), 0);
  std::vector<int> code;
  for (int step = 0; step < m - 2; ++step) {
    Vertex leaf = 0;
    while (gone[static_cast<std::size_t>(leaf)] || degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    gone[static_cast<std::size_t>(leaf)] = 1;
    for (Vertex w : adj[static_cast<std::size_t>(leaf)])
      if (!gone[static_cast<std::size_t>(w)]) {
        code.push_back(w);
        --degree[static_cast<std::size_t>(w)];
      }
  }
  return code;
}

std::string TreeSpec::canonical_form() const {
  const int m = order();
  auto adj = adjacency(m, edges());
  // Strip leaves layer by layer; the last one or two vertices are the centres.
  std::vector<int> degree(static_cast<std::size_t>(m));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < m; ++v) {
    degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = m;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : adj[static_cast<std::size_t>(leaf)])
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string s = encode_rooted(adj, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

TreeSpec parse_tree_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw parse_error(0, "tree spec '" + std::string(text) + "' lacks a ':'");
  std::string_view kind = text.substr(0, colon);
  std::string_view args = text.substr(colon + 1);
  try {
    if (kind == "file") {
      Graph g = read_graph_file(std::filesystem::path(std::string(args)));
      auto edges = g.edges();
      return TreeSpec::from_edges(g.order(), edges);
    }
    auto values = parse_ints(args, text);
    auto single = [&]() {
      if (values.size() != 1) throw parse_error(0, "'" + std::string(kind) + "' takes one order");
      return values[0];
    };
    if (kind == "path") return TreeSpec::path(single());
    if (kind == "star") return TreeSpec::star(single());
    if (kind == "spider") return TreeSpec::spider(values);
    if (kind == "caterpillar") return TreeSpec::caterpillar(values);
    if (kind == "prufer") return TreeSpec::from_prufer(values);
  } catch (const precondition_error& e) {
    throw parse_error(0, "tree spec '" + std::string(text) + "': " + e.what());
  }
  throw parse_error(0, "unknown tree family '" + std::string(kind) + "'");
}

}  // namespace edgekeep
