#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grundy {

/// Vertices are the integers 1..n.
using Vertex = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on [n]. Adjacency lists are kept sorted and an
/// adjacency matrix backs constant-time `adjacent` queries.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Loops, out-of-range endpoints and
  /// repeated edges (in either orientation) are rejected.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  /// Adds {u,v}; adding an existing edge is a no-op that returns false.
  bool add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  VertexSet closed_neighborhood(Vertex v) const;

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  /// Edges as (u,v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<unsigned char> matrix_;
};

enum class StructuredKind { path_power, cycle_power, complete, edgeless, co_path, co_cycle };

struct StructuredSpec {
  StructuredKind kind = StructuredKind::edgeless;
  int n = 1;
  int m = 1;
};

std::string_view to_string(StructuredKind kind);
/// Accepts both `path_power` and `path-power` spellings.
StructuredKind parse_structured_kind(std::string_view name);

/// P_n^m, C_n^m, K_n, S_n and the complements of P_n and C_n. Powers whose
/// exponent exceeds the diameter are returned as K_n.
Graph make_structured(const StructuredSpec& spec);

inline Graph path_power(int n, int m) { return make_structured({StructuredKind::path_power, n, m}); }
inline Graph cycle_power(int n, int m) { return make_structured({StructuredKind::cycle_power, n, m}); }
inline Graph complete_graph(int n) { return make_structured({StructuredKind::complete, n, 1}); }
inline Graph edgeless_graph(int n) { return make_structured({StructuredKind::edgeless, n, 1}); }

Graph complement(const Graph& g);

/// Induced subgraph plus the relabeling: `labels[i]` is the original vertex
/// that became vertex i+1 of `graph`.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> labels;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u);

bool is_independent(const Graph& g, const VertexSet& u);

/// Default cap on the order of graphs whose independent sets are enumerated.
inline constexpr int kIndependentSetLimit = 20;

/// Calls `visit` for every independent set of size >= min_size, in
/// lexicographic order of the sorted member lists (a proper prefix comes
/// before its extensions). Returning false from `visit` stops the walk.
void for_each_independent_set(const Graph& g, int min_size,
                              const std::function<bool(const VertexSet&)>& visit,
                              int limit = kIndependentSetLimit);

std::vector<VertexSet> independent_sets(const Graph& g, int min_size = 0,
                                        int limit = kIndependentSetLimit);

/// Components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Connected with a connected complement.
bool is_modular(const Graph& g);

}  // namespace grundy
