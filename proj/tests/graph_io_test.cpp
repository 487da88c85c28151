#include "doctest.h"
#include "edgekeep/errors.hpp"
#include "edgekeep/graph_io.hpp"
#include "support.hpp"

#include <filesystem>
#include <random>

using namespace edgekeep;
using testing_support::to_graph;

TEST_CASE("edge list emission is canonical") {
  Graph g = Graph::build(4, {{2, 1}, {3, 0}, {0, 1}});
  CHECK(to_edge_list(g) == "4 3\n0 1\n0 3\n1 2\n");
  CHECK(to_edge_list(Graph::build(2, {})) == "2 0\n");
}

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("# a triangle\n3 3\n0 1\n\n# middle comment\n1 2\n2 0\n");
  CHECK(g == to_graph(3, oracle::complete(3)));

  auto line_of = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const parse_error& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
  CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
  CHECK(line_of("3 2\n0 5\n") == 2);
  CHECK(line_of("3 2 7\n") == 1);
  CHECK(line_of("3 2\n0 1\n") == 2);
  CHECK_THROWS_AS(parse_edge_list("# nothing\n"), parse_error);
}

TEST_CASE("graph6 known strings") {
  // "C~" is K4: size byte 'C' = 63 + 4, one byte of six set bits.
  Graph k4 = parse_graph6("C~");
  CHECK(k4 == to_graph(4, oracle::complete(4)));
  auto [n, edges] = oracle::decode_graph6("C~");
  CHECK(k4 == to_graph(n, edges));
  CHECK(to_graph6(k4) == "C~");
  CHECK(to_graph6(Graph::build(1, {})) == "@");
  CHECK(to_graph6(Graph::build(0, {})) == "?");
  CHECK(parse_graph6(">>graph6<<C~\n") == k4);
  // Petersen graph in nauty's labelling.
  CHECK(parse_graph6("IheA@GUAo").edge_count() == 15);

  CHECK_THROWS_AS(parse_graph6("C"), parse_error);
  CHECK_THROWS_AS(parse_graph6("C~~"), parse_error);
  CHECK_THROWS_AS(parse_graph6("Aw"), parse_error);  // padding bits set
}

TEST_CASE("graph6 and edge list round trips") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng() % 80);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) edges.emplace_back(u, v);
    Graph g = Graph::build(n, edges);
    std::string g6 = to_graph6(g);
    CHECK(parse_graph6(g6) == g);
    CHECK(to_graph6(parse_graph6(g6)) == g6);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    if (n <= 62) {
      auto [on, oe] = oracle::decode_graph6(g6);
      CHECK(to_graph(on, oe) == g);
    }
  }
}

TEST_CASE("graph files") {
  auto dir = std::filesystem::temp_directory_path() / "edgekeep_io_test";
  std::filesystem::create_directories(dir);
  Graph g = to_graph(10, oracle::petersen());
  write_graph_file(dir / "p.g6", g, GraphFormat::graph6);
  write_graph_file(dir / "p.txt", g, GraphFormat::edge_list);
  CHECK(read_graph_file(dir / "p.g6") == g);
  CHECK(read_graph_file(dir / "p.txt") == g);
  CHECK(read_graph_file(dir / "p.txt", GraphFormat::edge_list) == g);
  CHECK_THROWS_AS(read_graph_file(dir / "missing.txt"), parse_error);
  CHECK(parse_format_name("graph6") == GraphFormat::graph6);
  CHECK_THROWS_AS(parse_format_name("dot"), precondition_error);
  std::filesystem::remove_all(dir);
}
