#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgekeep/graph.hpp"

namespace edgekeep {

// An abstract tree on 0..m-1 stored as a parent array: parent(0) = -1 and
// parent(i) < i otherwise, so 0, 1, ..., m-1 is a root-first order.
class TreeSpec {
 public:
  // Throws precondition_error unless the array describes a tree in the form above.
  static TreeSpec from_parents(std::vector<Vertex> parents, std::string label = {});

  // Any labelled tree; relabelled breadth-first from vertex 0 (neighbors in
  // ascending order).
  static TreeSpec from_edges(int m, std::span<const Edge> edges, std::string label = {});

  static TreeSpec path(int m);
  static TreeSpec star(int m);
  static TreeSpec spider(std::span<const int> legs);
  static TreeSpec caterpillar(std::span<const int> leaves_per_spine_vertex);
  static TreeSpec from_prufer(std::span<const int> code);  // labels 0..len+1

  int order() const { return static_cast<int>(parents_.size()); }
  Vertex parent(Vertex i) const { return parents_[static_cast<std::size_t>(i)]; }
  const std::vector<Vertex>& parents() const { return parents_; }
  std::vector<Edge> edges() const;
  Graph graph() const;

  // A spec string that parses back to an isomorphic tree.
  const std::string& label() const { return label_; }

  std::vector<int> prufer_code() const;

  // AHU encoding minimised over the tree's centres. Equal iff isomorphic.
  std::string canonical_form() const;

  friend bool operator==(const TreeSpec& a, const TreeSpec& b) { return a.parents_ == b.parents_; }

 private:
  std::vector<Vertex> parents_;
  std::string label_;
};

// "path:m" | "star:m" | "spider:l1,...,lr" | "caterpillar:s1,...,sp" |
// "prufer:a1,...,a_{m-2}" | "file:<edge-list path>". Throws parse_error.
TreeSpec parse_tree_spec(std::string_view text);

}  // namespace edgekeep
