#pragma once

#include <optional>

#include "grundy/closed.hpp"
#include "grundy/graph.hpp"
#include "grundy/oracle.hpp"
#include "grundy/product.hpp"

namespace grundy {

/// Clique/independent partition of a split graph with the independent side
/// of maximum size.
struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
  /// 1 iff two distinct clique vertices have no common neighbor on the
  /// independent side.
  int n_param = 0;
};

/// Degree-sequence recognition; nullopt when g is not split. A clique vertex
/// with no neighbor on the independent side (at most one exists) is moved
/// across so the independent side is maximum.
std::optional<SplitPartition> split_recognize(const Graph& g);

/// Checks the partition invariants; throws InputError on the first failure.
void validate_partition(const Graph& g, const SplitPartition& p);

int compute_n_param(const Graph& g, const VertexSet& clique, const VertexSet& independent);

/// gamma_gr = |I*| + n(G), with the matching Grundy dominating sequence.
GrundyResult gamma_split(const Graph& g, const SplitPartition& p);

struct SplitGivenIValue {
  int value = 0;
  /// Whether the closed-form sequence has self set exactly I. It does for
  /// I = I* and for I = {u} + (I* minus N(u)); for smaller sets the value is
  /// an upper bound that the X-join maximum never selects.
  bool attained = true;
};

SplitGivenIValue gamma_given_I_split(const Graph& g, const SplitPartition& p, const VertexSet& i);

XJoinSolveResult solve_xjoin_split(const Graph& g, const SplitPartition& p, const GammaProfile& profile);

/// gamma_gr(G o H) = |I*| gamma_gr(H) + n(G).
int lex_gamma_split(const SplitPartition& p, int gamma_h);

}  // namespace grundy
