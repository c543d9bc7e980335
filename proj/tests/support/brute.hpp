// Test-only reference implementations. Everything here works straight from
// the definitions (explicit sets, full enumeration) and shares no code path
// with the library solvers it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "grundy/graph.hpp"

namespace brute {

using grundy::Graph;
using grundy::Vertex;
using grundy::VertexSet;

inline std::set<Vertex> closed_nbhd(const Graph& g, Vertex v) {
  std::set<Vertex> s(g.neighbors(v).begin(), g.neighbors(v).end());
  s.insert(v);
  return s;
}

struct LegalSequence {
  std::vector<Vertex> seq;
  VertexSet self_set;
};

/// Every legal dominating sequence, with its self-footprinted set, by plain
/// depth-first extension over explicit std::set neighborhoods.
inline std::vector<LegalSequence> all_legal_sequences(const Graph& g) {
  std::vector<LegalSequence> out;
  const int n = g.order();
  std::vector<Vertex> seq;
  std::set<Vertex> dominated;
  VertexSet self;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(dominated.size()) == n) {
      VertexSet s = self;
      std::sort(s.begin(), s.end());
      out.push_back({seq, s});
      return;
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
      std::vector<Vertex> fresh;
      for (Vertex w : closed_nbhd(g, v)) {
        if (!dominated.count(w)) fresh.push_back(w);
      }
      if (fresh.empty()) continue;
      const bool is_self = !dominated.count(v);
      seq.push_back(v);
      for (Vertex w : fresh) dominated.insert(w);
      if (is_self) self.push_back(v);
      rec();
      if (is_self) self.pop_back();
      for (Vertex w : fresh) dominated.erase(w);
      seq.pop_back();
    }
  };
  rec();
  return out;
}

inline int gamma(const Graph& g) {
  int best = 0;
  for (const auto& s : all_legal_sequences(g)) best = std::max<int>(best, static_cast<int>(s.seq.size()));
  return best;
}

inline std::optional<int> gamma_given_I(const Graph& g, VertexSet i) {
  std::sort(i.begin(), i.end());
  std::optional<int> best;
  for (const auto& s : all_legal_sequences(g)) {
    if (s.self_set == i) best = std::max(best.value_or(0), static_cast<int>(s.seq.size()));
  }
  return best;
}

/// MWIS of P_n^m / C_n^m by enumerating all 2^n subsets.
inline std::int64_t mwis(int n, int m, const std::vector<std::int64_t>& w, bool circular,
                         bool pairs_only = false) {
  std::optional<std::int64_t> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (pairs_only && __builtin_popcount(mask) != 2) continue;
    bool ok = true;
    std::int64_t total = 0;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      total += w[i];
      for (int j = i + 1; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        int d = j - i;
        if (circular) d = std::min(d, n - d);
        if (d <= m) {
          ok = false;
          break;
        }
      }
    }
    if (ok) best = std::max(best.value_or(total), total);
  }
  return best.value_or(0);
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

inline Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (Vertex u = 1; u <= a.order(); ++u) {
    for (Vertex v = 1; v <= b.order(); ++v) g.add_edge(u, a.order() + v);
  }
  return g;
}

/// Random cograph on exactly n vertices from a random cotree.
inline Graph random_cograph(int n, std::mt19937& rng) {
  if (n == 1) return Graph(1);
  std::uniform_int_distribution<int> cut(1, n - 1);
  std::bernoulli_distribution coin(0.5);
  const int k = cut(rng);
  Graph a = random_cograph(k, rng);
  Graph b = random_cograph(n - k, rng);
  return coin(rng) ? disjoint_union(a, b) : join(a, b);
}

/// Split graph: clique on 1..k, independent k+1..n, random cross edges.
inline Graph random_split(int n, int k, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 1; u <= k; ++u) {
    for (Vertex v = u + 1; v <= k; ++v) g.add_edge(u, v);
  }
  for (Vertex u = 1; u <= k; ++u) {
    for (Vertex v = k + 1; v <= n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

/// True iff mapping[v-1] is an isomorphism from a onto b.
inline bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& mapping) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  for (auto [u, v] : a.edges()) {
    if (!b.adjacent(mapping[u - 1], mapping[v - 1])) return false;
  }
  return true;
}

}  // namespace brute
