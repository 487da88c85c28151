#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "edgekeep/graph.hpp"

namespace edgekeep {

enum class GraphFormat { edge_list, graph6 };

// Edge-list text: optional '#' comment lines, a header "n m", then m lines
// "u v" with 0-based endpoints. Errors carry the offending line number.
Graph parse_edge_list(std::string_view text);

// Canonical emission: header, edges sorted by (min, max), one trailing newline.
std::string to_edge_list(const Graph& g);

// graph6 (nauty). Accepts an optional ">>graph6<<" prefix and trailing
// whitespace. Orders up to 62 use the one-byte size prefix; larger orders use
// the standard '~' + 3-byte form.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

GraphFormat parse_format_name(std::string_view name);

// Reads a graph file. Without an explicit format, a ".g6" extension selects
// graph6 and anything else is read as an edge list.
Graph read_graph_file(const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format);

void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format);

}  // namespace edgekeep
