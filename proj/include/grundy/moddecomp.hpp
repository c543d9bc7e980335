#pragma once

#include <map>
#include <string>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/oracle.hpp"

namespace grundy {

enum class NodeKind { leaf, parallel, series, prime };

std::string_view to_string(NodeKind kind);

/// Node of a modular decomposition tree. `vertices` are original labels; a
/// prime node's quotient has one vertex per child, vertex i standing for
/// children[i-1].
struct ModuleNode {
  NodeKind kind = NodeKind::leaf;
  VertexSet vertices;
  Graph quotient;
  std::vector<ModuleNode> children;

  Vertex leaf_vertex() const { return vertices.front(); }
};

using ModuleTree = ModuleNode;

/// Parallel node over components when disconnected, series node over
/// co-components when the complement is disconnected, else a prime node over
/// the maximal proper modules. Children are ordered by smallest vertex.
ModuleTree decompose(const Graph& g);

/// Rebuilds the graph on [n] described by the tree.
Graph reconstruct(const ModuleTree& tree, int n);

struct SolveOptions {
  /// Largest prime quotient handed to the exhaustive per-I evaluator.
  int prime_threshold = kOracleDefaultMax;
};

/// Which rule handled each internal node, keyed by route name
/// ("parallel", "series", "prime:split", "prime:path", "prime:cycle",
/// "prime:co_path", "prime:co_cycle", "prime:oracle").
using RouteCounts = std::map<std::string, int>;

struct TreeSolveResult {
  int gamma = 0;
  VertexSequence witness;
  RouteCounts routes;
};

/// Bottom-up: leaves give (1, v); parallel nodes add, series nodes keep the
/// best child; prime nodes maximize over the quotient's independent sets
/// with the children's values as part profile. Throws IntractablePrimeError
/// for an unrecognized prime quotient above the threshold.
TreeSolveResult solve_tree(const ModuleTree& tree, const SolveOptions& options = {});

/// decompose + solve_tree; the witness is re-verified on g.
TreeSolveResult solve(const Graph& g, const SolveOptions& options = {});

/// Vertex order along g when g is a path (resp. cycle), starting at the
/// smallest endpoint (resp. vertex 1 towards its smaller neighbor).
std::optional<std::vector<Vertex>> path_order(const Graph& g);
std::optional<std::vector<Vertex>> cycle_order(const Graph& g);

/// Node counts by kind.
std::map<std::string, int> node_counts(const ModuleTree& tree);

}  // namespace grundy
