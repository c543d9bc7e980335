#include "grundy/io.hpp"

#include <fstream>
#include <sstream>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0;
  long long declared = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == 'c') continue;
    if (tag == "p") {
      if (have_header) fail(lineno, "second header line");
      if (!(fields >> n >> declared) || n < 0 || declared < 0) fail(lineno, "expected 'p <n> <edge-count>'");
      have_header = true;
      g = Graph(n);
    } else if (tag == "e") {
      if (!have_header) fail(lineno, "edge before header");
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v)) fail(lineno, "expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "edge endpoint out of range");
      if (u == v) fail(lineno, "self-loop");
      if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
        fail(lineno, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
    } else {
      fail(lineno, "unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) fail(lineno, "trailing token '" + extra + "'");
  }
  if (!have_header) throw ParseError("missing 'p <n> <edge-count>' header");
  if (static_cast<long long>(g.edge_count()) != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(g.edge_count()));
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  try {
    return read_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

nlohmann::json tree_to_json(const ModuleTree& tree) {
  nlohmann::json node;
  node["kind"] = std::string(to_string(tree.kind));
  if (tree.kind == NodeKind::leaf) node["vertex"] = tree.leaf_vertex();
  if (tree.kind == NodeKind::prime) {
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : tree.quotient.edges()) edges.push_back({u, v});
    node["quotient_edges"] = edges;
  }
  auto children = nlohmann::json::array();
  for (const auto& c : tree.children) children.push_back(tree_to_json(c));
  node["children"] = children;
  return node;
}

}  // namespace grundy
