#pragma once

#include <vector>

#include "edgekeep/graph.hpp"
#include "oracles.hpp"

namespace testing_support {

inline edgekeep::Graph to_graph(int n, const oracle::EdgeList& edges) {
  std::vector<edgekeep::Edge> list;
  for (auto [u, v] : edges) list.emplace_back(u, v);
  return edgekeep::Graph::build(n, list);
}

inline oracle::EdgeList to_list(const edgekeep::Graph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace testing_support
