#include "grundy/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "grundy/errors.hpp"

namespace grundy {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("graph order must be non-negative");
  adj_.resize(static_cast<std::size_t>(n));
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (!g.add_edge(u, v)) {
      throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range [1," + std::to_string(n_) + "]");
  }
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& cell = matrix_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  if (cell) return false;
  cell = 1;
  matrix_[static_cast<std::size_t>(v - 1) * n_ + (u - 1)] = 1;
  auto& au = adj_[u - 1];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adj_[v - 1];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return matrix_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] != 0;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v - 1];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet out = neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : adj_[u - 1]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string_view to_string(StructuredKind kind) {
  switch (kind) {
    case StructuredKind::path_power: return "path_power";
    case StructuredKind::cycle_power: return "cycle_power";
    case StructuredKind::complete: return "complete";
    case StructuredKind::edgeless: return "edgeless";
    case StructuredKind::co_path: return "co_path";
    case StructuredKind::co_cycle: return "co_cycle";
  }
  return "unknown";
}

StructuredKind parse_structured_kind(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (auto kind : {StructuredKind::path_power, StructuredKind::cycle_power, StructuredKind::complete,
                    StructuredKind::edgeless, StructuredKind::co_path, StructuredKind::co_cycle}) {
    if (key == to_string(kind)) return kind;
  }
  throw InputError("unknown structured kind '" + std::string(name) + "'");
}

namespace {

int circular_distance(int i, int j, int n) {
  int d = std::abs(i - j);
  return std::min(d, n - d);
}

}  // namespace

Graph make_structured(const StructuredSpec& spec) {
  const int n = spec.n;
  const int m = spec.m;
  if (n < 1) throw InputError("structured graph needs n >= 1");
  if (m < 1) throw InputError("structured graph needs m >= 1");
  const bool cyclic = spec.kind == StructuredKind::cycle_power || spec.kind == StructuredKind::co_cycle;
  if (cyclic && n < 3) throw InputError(std::string(to_string(spec.kind)) + " needs n >= 3");

  Graph g(n);
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      bool edge = false;
      switch (spec.kind) {
        case StructuredKind::path_power: edge = j - i <= m; break;
        case StructuredKind::cycle_power: edge = circular_distance(i, j, n) <= m; break;
        case StructuredKind::complete: edge = true; break;
        case StructuredKind::edgeless: edge = false; break;
        case StructuredKind::co_path: edge = j - i > 1; break;
        case StructuredKind::co_cycle: edge = circular_distance(i, j, n) > 1; break;
      }
      if (edge) g.add_edge(i, j);
    }
  }
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u) {
  std::vector<Vertex> labels = u;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw InputError("induced_subgraph: repeated vertex");
  }
  for (Vertex v : labels) {
    if (!g.contains(v)) throw InputError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  }
  const int k = static_cast<int>(labels.size());
  Graph h(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (g.adjacent(labels[a], labels[b])) h.add_edge(a + 1, b + 1);
    }
  }
  return {std::move(h), std::move(labels)};
}

bool is_independent(const Graph& g, const VertexSet& u) {
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t b = a + 1; b < u.size(); ++b) {
      if (u[a] == u[b] || g.adjacent(u[a], u[b])) return false;
    }
  }
  for (Vertex v : u) {
    if (!g.contains(v)) throw InputError("is_independent: vertex " + std::to_string(v) + " out of range");
  }
  return true;
}

void for_each_independent_set(const Graph& g, int min_size,
                              const std::function<bool(const VertexSet&)>& visit, int limit) {
  const int n = g.order();
  if (n > limit) {
    throw ThresholdError("independent set enumeration refused: n=" + std::to_string(n) +
                         " exceeds limit " + std::to_string(limit));
  }
  VertexSet current;
  bool stop = false;
  // Depth-first over the next member: emits the current set, then each
  // extension by a larger non-adjacent vertex.
  std::function<void(Vertex)> walk = [&](Vertex from) {
    if (static_cast<int>(current.size()) >= min_size) {
      if (!visit(current)) {
        stop = true;
        return;
      }
    }
    for (Vertex v = from; v <= n && !stop; ++v) {
      bool ok = true;
      for (Vertex u : current) {
        if (g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(v);
      walk(v + 1);
      current.pop_back();
    }
  };
  walk(1);
}

std::vector<VertexSet> independent_sets(const Graph& g, int min_size, int limit) {
  std::vector<VertexSet> out;
  for_each_independent_set(
      g, min_size,
      [&](const VertexSet& s) {
        out.push_back(s);
        return true;
      },
      limit);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<VertexSet> out;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_modular(const Graph& g) {
  return connected_components(g).size() == 1 && connected_components(complement(g)).size() == 1;
}

}  // namespace grundy
