#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "grundy/graph.hpp"
#include "grundy/moddecomp.hpp"

namespace grundy {

/// Reads the text format
///
///   p <n> <edge-count>
///   e <u> <v>        (one line per edge, 1-indexed)
///
/// Blank lines and lines starting with `c` are skipped. Duplicate or
/// reversed edges, loops and a wrong edge count raise ParseError.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
Graph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

/// {kind, vertex (leaves), quotient_edges (prime), children[]}.
nlohmann::json tree_to_json(const ModuleTree& tree);

}  // namespace grundy
