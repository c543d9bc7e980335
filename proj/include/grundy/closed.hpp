#pragma once

#include <string>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/mwis.hpp"
#include "grundy/product.hpp"
#include "grundy/sequence.hpp"

namespace grundy {

/// Independent set of a power graph with its extreme members.
class IndependentSetRecord {
 public:
  IndependentSetRecord() = default;
  /// Sorts and deduplicates; independence is checked by the consumers.
  explicit IndependentSetRecord(VertexSet members);

  const VertexSet& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  Vertex min_elem() const { return members_.front(); }
  Vertex max_elem() const { return members_.back(); }

  friend bool operator==(const IndependentSetRecord&, const IndependentSetRecord&) = default;

 private:
  VertexSet members_;
};

struct XJoinDiagnostics {
  WeightVector weights;
  Weight mwis_value = 0;
  std::vector<std::string> notes;
};

struct XJoinSolveResult {
  int gamma = 0;
  IndependentSetRecord argmax_I;
  /// Skeleton on the main factor; lifting replaces each vertex of argmax_I
  /// by a Grundy dominating sequence of its part.
  VertexSequence main_sequence;
  XJoinDiagnostics diagnostics;
};

/// Closed-form gamma_gr of the structured families; degenerate powers are
/// complete graphs. Throws UnsupportedError for small complements with no
/// closed form (co_path with n < 4, co_cycle with n < 5).
int gamma_structured(const StructuredSpec& spec);

/// Run i, i+1, ..., j. In circular mode the walk wraps from n to 1.
VertexSequence interval_sequence(Vertex i, Vertex j, int n, bool circular);

/// Legal dominating sequence of C_n^m with self set containing I and length
/// n - |I|m; a singleton {k} is built as {k, k+m+1}.
VertexSequence build_S_C(int n, int m, const IndependentSetRecord& i);

/// Legal dominating sequence of P_n^m for I with min <= m+1 and
/// max >= n-m, of length max - min + 1 - (|I|-1)m.
VertexSequence build_S_P(int n, int m, const IndependentSetRecord& i);

/// True when min(I) <= m+1 and max(I) >= n-m.
bool in_path_family(int n, int m, const IndependentSetRecord& i);

int gamma_given_I_cycle_power(int n, int m, const IndependentSetRecord& i);
int gamma_given_I_path_power(int n, int m, const IndependentSetRecord& i);

XJoinSolveResult solve_xjoin_cycle_power(int n, int m, const GammaProfile& profile);
XJoinSolveResult solve_xjoin_path_power(int n, int m, const GammaProfile& profile);

enum class PowerKind { path, cycle };

/// gamma_gr(C_n^m o H) or gamma_gr(P_n^m o H) from gamma_gr(H).
int lex_gamma(PowerKind kind, int n, int m, int gamma_h);

}  // namespace grundy
