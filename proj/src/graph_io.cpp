#include "edgekeep/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "edgekeep/errors.hpp"

namespace edgekeep {
namespace {

constexpr std::size_t graph6_short_limit = 62;
constexpr std::size_t graph6_long_limit = 258047;

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Splits a line into whitespace-separated integer fields.
std::vector<long long> integer_fields(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j)
      throw parse_error(line_no, "expected an integer, found '" + std::string(line.substr(i, j - i)) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = integer_fields(line, line_no);
    if (fields.size() != 2) throw parse_error(line_no, "expected two integers");
    if (n < 0) {
      n = fields[0];
      m = fields[1];
      if (n < 0 || m < 0) throw parse_error(line_no, "negative count in header");
      if (n > 1'000'000) throw parse_error(line_no, "vertex count too large");
      continue;
    }
    auto [u, v] = std::pair{fields[0], fields[1]};
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error(line_no, "endpoint out of range 0.." + std::to_string(n - 1));
    if (u == v) throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
    if (static_cast<long long>(edges.size()) == m)
      throw parse_error(line_no, "more edge lines than the header's " + std::to_string(m));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw parse_error(0, "missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != m)
    throw parse_error(line_no, "header promises " + std::to_string(m) + " edges, found " +
                                   std::to_string(edges.size()));
  return Graph::build(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (s.starts_with(header)) s.remove_prefix(header.size());
  for (char c : s)
    if (c < 63 || c > 126) throw parse_error(0, "graph6 byte out of range 63..126");
  if (s.empty()) throw parse_error(0, "empty graph6 string");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (s[0] != 126) {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw parse_error(0, "unsupported graph6 size prefix");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(s[i] - 63);
    pos = 4;
  }
  std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t need = (bits + 5) / 6;
  if (s.size() - pos != need)
    throw parse_error(0, "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                             std::to_string(need));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    int last = s.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw parse_error(0, "nonzero graph6 padding bits");
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  auto n = static_cast<std::size_t>(g.order());
  if (n > graph6_long_limit) throw precondition_error("graph too large for graph6");
  std::string out;
  if (n <= graph6_short_limit) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edge_list;
  if (name == "graph6") return GraphFormat::graph6;
  throw precondition_error("unknown graph format '" + std::string(name) + "' (edgelist|graph6)");
}

namespace {
std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

Graph read_graph_file(const std::filesystem::path& path) {
  return read_graph_file(path, path.extension() == ".g6" ? GraphFormat::graph6 : GraphFormat::edge_list);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::string text = slurp(path);
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw precondition_error("cannot write " + path.string());
  if (format == GraphFormat::graph6)
    out << to_graph6(g) << '\n';
  else
    out << to_edge_list(g);
}

}  // namespace edgekeep
