#include "grundy/product.hpp"

#include <algorithm>
#include <string>

#include "grundy/errors.hpp"

namespace grundy {

GammaProfile::GammaProfile(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) {
      throw InputError("gamma profile entry for vertex " + std::to_string(i + 1) + " must be >= 1");
    }
  }
}

GammaProfile GammaProfile::constant(int n, int value) {
  return GammaProfile(std::vector<int>(static_cast<std::size_t>(n), value));
}

XJoinInstance::XJoinInstance(Graph main, std::vector<Graph> parts) : main_(std::move(main)), parts_(std::move(parts)) {
  const int n = main_.order();
  if (static_cast<int>(parts_.size()) != n) {
    throw InputError("xjoin: " + std::to_string(parts_.size()) + " parts for a main factor of order " +
                     std::to_string(n));
  }
  int total = 0;
  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (parts_[v - 1].order() == 0) throw InputError("xjoin: part of vertex " + std::to_string(v) + " is empty");
    offset_[v - 1] = total;
    total += parts_[v - 1].order();
  }
  offset_[n] = total;
  to_pair_.reserve(static_cast<std::size_t>(total));
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex x = 1; x <= parts_[v - 1].order(); ++x) to_pair_.push_back({v, x});
  }

  product_ = Graph(total);
  for (Vertex v = 1; v <= n; ++v) {
    for (const auto& [x, y] : parts_[v - 1].edges()) product_.add_edge(from_pair(v, x), from_pair(v, y));
  }
  for (const auto& [v, w] : main_.edges()) {
    for (Vertex x = 1; x <= parts_[v - 1].order(); ++x) {
      for (Vertex y = 1; y <= parts_[w - 1].order(); ++y) product_.add_edge(from_pair(v, x), from_pair(w, y));
    }
  }
}

Vertex XJoinInstance::from_pair(Vertex v, Vertex x) const {
  if (!main_.contains(v) || !part(v).contains(x)) {
    throw InputError("xjoin: no product vertex for (" + std::to_string(v) + "," + std::to_string(x) + ")");
  }
  return offset_[v - 1] + x;
}

int XJoinInstance::part_count(const VertexSequence& s, Vertex v) const {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](Vertex p) { return to_pair(p).main == v; }));
}

std::optional<Vertex> XJoinInstance::first_in_part(const VertexSequence& s, Vertex v) const {
  for (Vertex p : s) {
    if (to_pair(p).main == v) return p;
  }
  return std::nullopt;
}

XJoinInstance xjoin(const Graph& main, std::vector<Graph> parts) { return XJoinInstance(main, std::move(parts)); }

XJoinInstance lexicographic(const Graph& main, const Graph& h) {
  return XJoinInstance(main, std::vector<Graph>(static_cast<std::size_t>(main.order()), h));
}

Graph replace_vertex(const Graph& g, Vertex u, const Graph& h) {
  if (!g.contains(u)) throw InputError("replace_vertex: vertex " + std::to_string(u) + " out of range");
  std::vector<Graph> parts(static_cast<std::size_t>(g.order()), Graph(1));
  parts[u - 1] = h;
  return XJoinInstance(g, std::move(parts)).product();
}

VertexSequence lift_with(const VertexSequence& s_main, const VertexSet& replaced,
                         const std::function<VertexSequence(Vertex)>& part_sequence,
                         const std::function<Vertex(Vertex)>& representative) {
  for (Vertex v : replaced) {
    if (!s_main.contains(v)) {
      throw InputError("lift: vertex " + std::to_string(v) + " of I does not occur in the main sequence");
    }
  }
  std::vector<Vertex> out;
  for (Vertex w : s_main) {
    if (std::find(replaced.begin(), replaced.end(), w) != replaced.end()) {
      const VertexSequence sub = part_sequence(w);
      out.insert(out.end(), sub.begin(), sub.end());
    } else {
      out.push_back(representative(w));
    }
  }
  return VertexSequence(std::move(out));
}

VertexSequence lift_sequence(const XJoinInstance& inst, const VertexSequence& s_main, const VertexSet& i,
                             const std::map<Vertex, VertexSequence>& part_seqs) {
  return lift_with(
      s_main, i,
      [&](Vertex v) {
        auto it = part_seqs.find(v);
        if (it == part_seqs.end()) {
          throw InputError("lift_sequence: no part sequence for vertex " + std::to_string(v));
        }
        std::vector<Vertex> mapped;
        for (Vertex x : it->second) mapped.push_back(inst.from_pair(v, x));
        return VertexSequence(std::move(mapped));
      },
      [&](Vertex w) { return inst.from_pair(w, 1); });
}

GenericXJoinResult xjoin_gamma_generic(const Graph& main, const GammaProfile& profile, const PerIEvaluator& per_I,
                                       int limit) {
  if (profile.size() != main.order()) {
    throw InputError("xjoin_gamma_generic: profile has " + std::to_string(profile.size()) +
                     " entries for a main factor of order " + std::to_string(main.order()));
  }
  std::optional<GenericXJoinResult> best;
  for_each_independent_set(
      main, 0,
      [&](const VertexSet& s) {
        const auto base = per_I(s);
        if (!base) return true;
        int value = *base;
        for (Vertex v : s) value += profile[v] - 1;
        if (!best || value > best->gamma || (value == best->gamma && s.size() > best->argmax.size())) {
          best = GenericXJoinResult{value, s};
        }
        return true;
      },
      limit);
  if (!best) {
    if (main.order() == 0) return {};
    throw InternalError("xjoin_gamma_generic: every independent set was reported infeasible");
  }
  return *best;
}

PerIEvaluator oracle_per_I(const Graph& main, const OracleOptions& options) {
  return [main, options](const VertexSet& s) -> std::optional<int> {
    auto r = gamma_gr_given_I(main, s, options);
    if (!r) return std::nullopt;
    return r->gamma;
  };
}

int replace_vertex_gamma(const Graph& g, Vertex u, int gamma_h, const OracleOptions& options) {
  if (gamma_h < 1) throw InputError("replace_vertex_gamma: gamma of H must be >= 1");
  const int whole = gamma_gr_exact(g, options).gamma;
  const int rooted = gamma_gr_rooted(g, u, options);
  return std::max(whole, rooted + gamma_h - 1);
}

}  // namespace grundy
