#include "grundy/moddecomp.hpp"

#include <algorithm>
#include <string>

#include "grundy/closed.hpp"
#include "grundy/errors.hpp"
#include "grundy/product.hpp"
#include "grundy/split.hpp"

namespace grundy {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::parallel: return "parallel";
    case NodeKind::series: return "series";
    case NodeKind::prime: return "prime";
  }
  return "unknown";
}

namespace {

std::vector<VertexSet> relabel(const std::vector<VertexSet>& blocks, const std::vector<Vertex>& labels) {
  std::vector<VertexSet> out;
  for (const auto& block : blocks) {
    VertexSet mapped;
    for (Vertex v : block) mapped.push_back(labels[v - 1]);
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

// Smallest module of g[u] containing `seed`: keep absorbing vertices that
// see part, but not all, of the current set.
VertexSet module_closure(const Graph& g, const VertexSet& u, Vertex a, Vertex b) {
  const std::size_t k = u.size();
  std::vector<char> in(k, 0);
  std::vector<int> seen(k, 0);
  std::size_t size = 0;
  auto add = [&](std::size_t idx) {
    in[idx] = 1;
    ++size;
    for (std::size_t x = 0; x < k; ++x) {
      if (x != idx && g.adjacent(u[x], u[idx])) ++seen[x];
    }
  };
  add(static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), a) - u.begin()));
  add(static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), b) - u.begin()));
  bool grew = true;
  while (grew && size < k) {
    grew = false;
    for (std::size_t x = 0; x < k; ++x) {
      if (!in[x] && seen[x] > 0 && static_cast<std::size_t>(seen[x]) < size) {
        add(x);
        grew = true;
      }
    }
  }
  VertexSet out;
  for (std::size_t x = 0; x < k; ++x) {
    if (in[x]) out.push_back(u[x]);
  }
  return out;
}

ModuleNode build(const Graph& g, const VertexSet& u) {
  ModuleNode node;
  node.vertices = u;
  if (u.size() == 1) return node;

  const auto sub = induced_subgraph(g, u);
  auto blocks = relabel(connected_components(sub.graph), sub.labels);
  if (blocks.size() > 1) {
    node.kind = NodeKind::parallel;
  } else if (blocks = relabel(connected_components(complement(sub.graph)), sub.labels); blocks.size() > 1) {
    node.kind = NodeKind::series;
  } else {
    // Both g[u] and its complement are connected: the maximal proper modules
    // partition u. The one holding a is the union of the proper closures of
    // pairs {a,b}.
    node.kind = NodeKind::prime;
    blocks.clear();
    std::vector<char> assigned(static_cast<std::size_t>(g.order()) + 1, 0);
    for (Vertex a : u) {
      if (assigned[a]) continue;
      VertexSet block{a};
      for (Vertex b : u) {
        if (b <= a || assigned[b] || std::binary_search(block.begin(), block.end(), b)) continue;
        VertexSet closure = module_closure(g, u, a, b);
        if (closure.size() == u.size()) continue;
        VertexSet merged;
        std::set_union(block.begin(), block.end(), closure.begin(), closure.end(), std::back_inserter(merged));
        block = std::move(merged);
      }
      for (Vertex v : block) assigned[v] = 1;
      blocks.push_back(std::move(block));
    }
    VertexSet reps;
    for (const auto& block : blocks) reps.push_back(block.front());
    node.quotient = induced_subgraph(g, reps).graph;
  }
  for (const auto& block : blocks) node.children.push_back(build(g, block));
  return node;
}

void collect_edges(const ModuleTree& t, Graph& out) {
  for (const auto& child : t.children) collect_edges(child, out);
  auto link = [&](const ModuleNode& x, const ModuleNode& y) {
    for (Vertex a : x.vertices) {
      for (Vertex b : y.vertices) out.add_edge(a, b);
    }
  };
  if (t.kind == NodeKind::series) {
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      for (std::size_t j = i + 1; j < t.children.size(); ++j) link(t.children[i], t.children[j]);
    }
  } else if (t.kind == NodeKind::prime) {
    for (const auto& [i, j] : t.quotient.edges()) link(t.children[i - 1], t.children[j - 1]);
  }
}

bool all_leaves(const ModuleNode& node) {
  return std::all_of(node.children.begin(), node.children.end(),
                     [](const ModuleNode& c) { return c.kind == NodeKind::leaf; });
}

struct PrimeOutcome {
  int gamma = 0;
  VertexSequence skeleton;  // on the quotient
  VertexSet replaced;       // quotient vertices whose child witness is spliced in
  std::string route;
};

// Maps a result computed on relabeled quotient (position i <-> order[i-1])
// back to quotient labels.
PrimeOutcome from_ordered(const XJoinSolveResult& r, const std::vector<Vertex>& order, std::string route) {
  PrimeOutcome out;
  out.gamma = r.gamma;
  std::vector<Vertex> seq;
  for (Vertex p : r.main_sequence) seq.push_back(order[p - 1]);
  out.skeleton = VertexSequence(std::move(seq));
  for (Vertex p : r.argmax_I.members()) out.replaced.push_back(order[p - 1]);
  std::sort(out.replaced.begin(), out.replaced.end());
  out.route = std::move(route);
  return out;
}

PrimeOutcome solve_prime(const ModuleNode& node, const GammaProfile& profile, const SolveOptions& options) {
  const Graph& q = node.quotient;
  const int size = q.order();

  if (auto p = split_recognize(q)) {
    const auto r = solve_xjoin_split(q, *p, profile);
    return {r.gamma, r.main_sequence, r.argmax_I.members(), "prime:split"};
  }
  auto reorder = [&](const std::vector<Vertex>& order) {
    std::vector<int> values;
    for (Vertex v : order) values.push_back(profile[v]);
    return GammaProfile(std::move(values));
  };
  if (auto order = path_order(q)) {
    return from_ordered(solve_xjoin_path_power(size, 1, reorder(*order)), *order, "prime:path");
  }
  if (auto order = cycle_order(q)) {
    return from_ordered(solve_xjoin_cycle_power(size, 1, reorder(*order)), *order, "prime:cycle");
  }
  if (all_leaves(node) && size >= 5) {
    const Graph co = complement(q);
    std::optional<std::vector<Vertex>> order;
    std::string route;
    if ((order = path_order(co))) route = "prime:co_path";
    else if ((order = cycle_order(co))) route = "prime:co_cycle";
    if (order) {
      const auto& o = *order;
      return {3, VertexSequence{o[1], o[3], o[2]}, {}, route};
    }
  }
  if (size > options.prime_threshold) {
    throw IntractablePrimeError("intractable prime node: quotient of order " + std::to_string(size) +
                                    " over vertices starting at " + std::to_string(node.vertices.front()) +
                                    " exceeds threshold " + std::to_string(options.prime_threshold),
                                size);
  }
  OracleOptions oracle;
  oracle.max_n = std::max(options.prime_threshold, size);
  const auto best = xjoin_gamma_generic(q, profile, oracle_per_I(q, oracle), std::max(size, kIndependentSetLimit));
  const auto seq = gamma_gr_given_I(q, best.argmax, oracle);
  if (!seq) throw InternalError("prime node: argmax independent set has no sequence");
  return {best.gamma, seq->witness, best.argmax, "prime:oracle"};
}

TreeSolveResult solve_node(const ModuleNode& node, const SolveOptions& options) {
  TreeSolveResult out;
  if (node.kind == NodeKind::leaf) {
    out.gamma = 1;
    out.witness = VertexSequence{node.leaf_vertex()};
    return out;
  }
  std::vector<TreeSolveResult> kids;
  for (const auto& child : node.children) {
    kids.push_back(solve_node(child, options));
    for (const auto& [route, count] : kids.back().routes) out.routes[route] += count;
  }
  switch (node.kind) {
    case NodeKind::parallel:
      for (const auto& k : kids) {
        out.gamma += k.gamma;
        out.witness = out.witness + k.witness;
      }
      ++out.routes["parallel"];
      break;
    case NodeKind::series: {
      std::size_t best = 0;
      for (std::size_t i = 1; i < kids.size(); ++i) {
        if (kids[i].gamma > kids[best].gamma) best = i;
      }
      out.gamma = kids[best].gamma;
      out.witness = kids[best].witness;
      ++out.routes["series"];
      break;
    }
    case NodeKind::prime: {
      std::vector<int> values;
      for (const auto& k : kids) values.push_back(k.gamma);
      const GammaProfile profile(values);
      const PrimeOutcome r = solve_prime(node, profile, options);
      out.gamma = r.gamma;
      out.witness = lift_with(
          r.skeleton, r.replaced, [&](Vertex v) { return kids[v - 1].witness; },
          [&](Vertex w) { return node.children[w - 1].vertices.front(); });
      ++out.routes[r.route];
      break;
    }
    case NodeKind::leaf:
      break;
  }
  if (static_cast<int>(out.witness.size()) != out.gamma) {
    throw InternalError("solve_tree: witness length " + std::to_string(out.witness.size()) + " but gamma " +
                        std::to_string(out.gamma));
  }
  return out;
}

void count_nodes(const ModuleTree& t, std::map<std::string, int>& out) {
  ++out[std::string(to_string(t.kind))];
  for (const auto& c : t.children) count_nodes(c, out);
}

}  // namespace

ModuleTree decompose(const Graph& g) {
  if (g.order() == 0) throw InputError("decompose: empty graph");
  VertexSet all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 1; v <= g.order(); ++v) all[v - 1] = v;
  return build(g, all);
}

Graph reconstruct(const ModuleTree& tree, int n) {
  Graph out(n);
  collect_edges(tree, out);
  return out;
}

TreeSolveResult solve_tree(const ModuleTree& tree, const SolveOptions& options) { return solve_node(tree, options); }

TreeSolveResult solve(const Graph& g, const SolveOptions& options) {
  TreeSolveResult out = solve_tree(decompose(g), options);
  if (!is_legal_dominating(g, out.witness) || static_cast<int>(out.witness.size()) != out.gamma) {
    throw InternalError("solve: witness failed re-verification");
  }
  return out;
}

std::optional<std::vector<Vertex>> path_order(const Graph& g) {
  const int n = g.order();
  if (n < 2 || static_cast<int>(g.edge_count()) != n - 1) return std::nullopt;
  Vertex start = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) > 2 || g.degree(v) == 0) return std::nullopt;
    if (g.degree(v) == 1 && start == 0) start = v;
  }
  if (start == 0) return std::nullopt;
  std::vector<Vertex> order{start};
  Vertex prev = 0;
  Vertex cur = start;
  while (static_cast<int>(order.size()) < n) {
    Vertex next = 0;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev) next = w;
    }
    if (next == 0) return std::nullopt;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

std::optional<std::vector<Vertex>> cycle_order(const Graph& g) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(g.edge_count()) != n) return std::nullopt;
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  std::vector<Vertex> order{1};
  Vertex prev = 1;
  Vertex cur = g.neighbors(1).front();
  while (cur != 1) {
    order.push_back(cur);
    const auto& nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

std::map<std::string, int> node_counts(const ModuleTree& tree) {
  std::map<std::string, int> out;
  count_nodes(tree, out);
  return out;
}

}  // namespace grundy
