#include "grundy/split.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& side) {
  VertexSet out;
  for (Vertex w : g.neighbors(v)) {
    if (contains(side, w)) out.push_back(w);
  }
  return out;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!g.adjacent(s[a], s[b])) return false;
    }
  }
  return true;
}

// Smallest clique vertex u that has a partner v with no common neighbor in
// the independent side.
std::optional<Vertex> separating_clique_vertex(const Graph& g, const VertexSet& clique, const VertexSet& independent) {
  for (Vertex u : clique) {
    const VertexSet nu = neighbors_in(g, u, independent);
    for (Vertex v : clique) {
      if (v == u) continue;
      const VertexSet nv = neighbors_in(g, v, independent);
      VertexSet common;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
      if (common.empty()) return u;
    }
  }
  return std::nullopt;
}

}  // namespace

int compute_n_param(const Graph& g, const VertexSet& clique, const VertexSet& independent) {
  return separating_clique_vertex(g, clique, independent) ? 1 : 0;
}

std::optional<SplitPartition> split_recognize(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  int k = 0;
  for (int i = 1; i <= n; ++i) {
    if (g.degree(order[i - 1]) >= i - 1) k = i;
  }
  long long head = 0;
  long long tail = 0;
  for (int i = 1; i <= n; ++i) (i <= k ? head : tail) += g.degree(order[i - 1]);
  if (head != static_cast<long long>(k) * (k - 1) + tail) return std::nullopt;

  SplitPartition p;
  p.clique.assign(order.begin(), order.begin() + k);
  p.independent.assign(order.begin() + k, order.end());
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  if (!is_clique(g, p.clique) || !is_independent(g, p.independent)) {
    throw InternalError("split_recognize: degree criterion accepted an invalid partition");
  }
  for (Vertex v : p.clique) {
    if (neighbors_in(g, v, p.independent).empty()) {
      p.clique.erase(std::find(p.clique.begin(), p.clique.end(), v));
      p.independent.insert(std::lower_bound(p.independent.begin(), p.independent.end(), v), v);
      break;
    }
  }
  p.n_param = compute_n_param(g, p.clique, p.independent);
  return p;
}

void validate_partition(const Graph& g, const SplitPartition& p) {
  VertexSet all = p.clique;
  all.insert(all.end(), p.independent.begin(), p.independent.end());
  std::sort(all.begin(), all.end());
  VertexSet expected(static_cast<std::size_t>(g.order()));
  std::iota(expected.begin(), expected.end(), 1);
  if (all != expected) throw InputError("split partition does not cover the vertex set exactly once");
  if (!std::is_sorted(p.clique.begin(), p.clique.end()) || !std::is_sorted(p.independent.begin(), p.independent.end())) {
    throw InputError("split partition sides must be sorted");
  }
  if (!is_clique(g, p.clique)) throw InputError("split partition: clique side is not a clique");
  if (!is_independent(g, p.independent)) throw InputError("split partition: independent side is not independent");
  for (Vertex v : p.clique) {
    if (neighbors_in(g, v, p.independent).empty()) {
      throw InputError("split partition: clique vertex " + std::to_string(v) +
                       " has no neighbor on the independent side");
    }
  }
  if (p.n_param != compute_n_param(g, p.clique, p.independent)) throw InputError("split partition: wrong n_param");
}

GrundyResult gamma_split(const Graph& g, const SplitPartition& p) {
  validate_partition(g, p);
  GrundyResult out;
  out.gamma = static_cast<int>(p.independent.size()) + p.n_param;
  if (p.n_param == 0) {
    out.witness = VertexSequence(p.independent);
  } else {
    const Vertex u = *separating_clique_vertex(g, p.clique, p.independent);
    const VertexSet near = neighbors_in(g, u, p.independent);
    out.witness = VertexSequence(near) + VertexSequence{u} + VertexSequence(minus(p.independent, near));
  }
  return out;
}

SplitGivenIValue gamma_given_I_split(const Graph& g, const SplitPartition& p, const VertexSet& i) {
  validate_partition(g, p);
  if (!is_independent(g, i)) throw InputError("gamma_given_I_split: set is not independent");
  VertexSet sorted = i;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex u : sorted) {
    if (contains(p.clique, u)) {
      const VertexSet far = minus(p.independent, neighbors_in(g, u, p.independent));
      VertexSet full = far;
      full.insert(std::lower_bound(full.begin(), full.end(), u), u);
      return {static_cast<int>(far.size()) + 1, full == sorted};
    }
  }
  return {static_cast<int>(p.independent.size()) + p.n_param, sorted == p.independent};
}

XJoinSolveResult solve_xjoin_split(const Graph& g, const SplitPartition& p, const GammaProfile& profile) {
  validate_partition(g, p);
  if (profile.size() != g.order()) {
    throw InputError("solve_xjoin_split: profile has " + std::to_string(profile.size()) + " entries, expected " +
                     std::to_string(g.order()));
  }
  XJoinSolveResult out;
  int best = p.n_param;
  for (Vertex w : p.independent) best += profile[w];
  out.gamma = best;
  out.argmax_I = IndependentSetRecord(p.independent);
  out.main_sequence = gamma_split(g, p).witness;
  out.diagnostics.notes.push_back("independent-side branch");

  for (Vertex v : p.clique) {
    const VertexSet far = minus(p.independent, neighbors_in(g, v, p.independent));
    int value = profile[v];
    for (Vertex w : far) value += profile[w];
    if (value > out.gamma) {
      out.gamma = value;
      VertexSet members = far;
      members.push_back(v);
      out.argmax_I = IndependentSetRecord(members);
      out.main_sequence = VertexSequence{v} + VertexSequence(far);
      out.diagnostics.notes.back() = "clique branch at vertex " + std::to_string(v);
    }
  }
  return out;
}

int lex_gamma_split(const SplitPartition& p, int gamma_h) {
  if (gamma_h < 1) throw InputError("lex_gamma_split: gamma of H must be >= 1");
  return static_cast<int>(p.independent.size()) * gamma_h + p.n_param;
}

}  // namespace grundy
