#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/oracle.hpp"
#include "grundy/sequence.hpp"

namespace grundy {

/// Grundy domination numbers of the parts of an X-join, indexed by main
/// vertex (1-based). Every value is at least 1.
class GammaProfile {
 public:
  GammaProfile() = default;
  explicit GammaProfile(std::vector<int> values);
  static GammaProfile constant(int n, int value);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](Vertex v) const { return values_.at(static_cast<std::size_t>(v - 1)); }
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<int> values_;
};

/// Main vertex and the vertex inside its part.
struct PartVertex {
  Vertex main = 0;
  Vertex part = 0;
  friend bool operator==(const PartVertex&, const PartVertex&) = default;
};

/// G <- R: every main vertex v is replaced by parts[v-1]. Product vertices
/// are laid out part by part in main-vertex order.
class XJoinInstance {
 public:
  XJoinInstance(Graph main, std::vector<Graph> parts);

  const Graph& main() const { return main_; }
  const std::vector<Graph>& parts() const { return parts_; }
  const Graph& part(Vertex v) const { return parts_.at(static_cast<std::size_t>(v - 1)); }
  const Graph& product() const { return product_; }

  PartVertex to_pair(Vertex p) const { return to_pair_.at(static_cast<std::size_t>(p - 1)); }
  Vertex from_pair(Vertex v, Vertex x) const;

  /// Number of sequence vertices lying in the part of v.
  int part_count(const VertexSequence& s, Vertex v) const;
  /// First sequence vertex lying in the part of v.
  std::optional<Vertex> first_in_part(const VertexSequence& s, Vertex v) const;

 private:
  Graph main_;
  std::vector<Graph> parts_;
  Graph product_;
  std::vector<PartVertex> to_pair_;
  std::vector<Vertex> offset_;
};

XJoinInstance xjoin(const Graph& main, std::vector<Graph> parts);
XJoinInstance lexicographic(const Graph& main, const Graph& h);

/// G_{u <- H}: the graph with u replaced by h.
Graph replace_vertex(const Graph& g, Vertex u, const Graph& h);

/// Replaces each v in `replaced` by part_sequence(v) and every other vertex w
/// by the single vertex representative(w). Labels are whatever the callbacks
/// return, so the same routine lifts onto products and decomposition trees.
VertexSequence lift_with(const VertexSequence& s_main, const VertexSet& replaced,
                         const std::function<VertexSequence(Vertex)>& part_sequence,
                         const std::function<Vertex(Vertex)>& representative);

/// Lifts a main-factor sequence onto the product: each v in i becomes
/// part_seqs[v], every other w becomes (w, 1).
VertexSequence lift_sequence(const XJoinInstance& inst, const VertexSequence& s_main, const VertexSet& i,
                             const std::map<Vertex, VertexSequence>& part_seqs);

/// gamma_gr(main, I), or nullopt when no legal sequence has self set I.
using PerIEvaluator = std::function<std::optional<int>(const VertexSet&)>;

struct GenericXJoinResult {
  int gamma = 0;
  VertexSet argmax;
};

/// Maximizes gamma_gr(main, I) + sum_{v in I} (profile[v] - 1) over the
/// independent sets of main. Ties go to the larger I, then to the first set
/// in enumeration order.
GenericXJoinResult xjoin_gamma_generic(const Graph& main, const GammaProfile& profile, const PerIEvaluator& per_I,
                                       int limit = kIndependentSetLimit);

/// Per-I evaluator backed by the exhaustive oracle.
PerIEvaluator oracle_per_I(const Graph& main, const OracleOptions& options = {});

/// gamma_gr(G_{u <- H}) from gamma_gr(G), the rooted value at u and gamma_gr(H).
int replace_vertex_gamma(const Graph& g, Vertex u, int gamma_h, const OracleOptions& options = {});

}  // namespace grundy
