#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/sequence.hpp"

namespace grundy {

/// Private neighborhoods of a legal dominating sequence and the footprint
/// map they induce.
struct FootprintCertificate {
  VertexSequence sequence;
  /// private_sets[i] = N[v_i] minus the closed neighborhoods of v_1..v_{i-1}.
  std::vector<VertexSet> private_sets;
  /// footprinter[v-1] is the sequence vertex whose private set holds v.
  std::vector<Vertex> footprinter;
  /// Vertices that footprint themselves.
  VertexSet self_set;

  Vertex footprinter_of(Vertex v) const { return footprinter.at(static_cast<std::size_t>(v - 1)); }
};

struct SequenceViolation {
  enum class Kind { empty_private_neighborhood, not_dominating };
  Kind kind = Kind::not_dominating;
  /// 1-based position of the first step with nothing new to dominate.
  std::size_t position = 0;
  VertexSet undominated;

  std::string describe() const;
};

using VerifyResult = std::variant<FootprintCertificate, SequenceViolation>;

/// Checks that every step footprints a new vertex and that the sequence
/// dominates g. Out-of-range vertices raise InputError.
VerifyResult verify_sequence(const Graph& g, const VertexSequence& s);

inline bool is_legal_dominating(const Graph& g, const VertexSequence& s) {
  return std::holds_alternative<FootprintCertificate>(verify_sequence(g, s));
}

inline constexpr int kOracleDefaultMax = 14;

struct OracleOptions {
  /// Largest order the exhaustive routines accept.
  int max_n = kOracleDefaultMax;
  /// Memo entries kept per search; states beyond the cap are recomputed.
  std::size_t memo_limit = std::size_t{1} << 24;
};

struct GrundyResult {
  int gamma = 0;
  VertexSequence witness;
};

/// Longest legal dominating sequence; among the longest, the
/// lexicographically smallest is returned.
GrundyResult gamma_gr_exact(const Graph& g, const OracleOptions& options = {});

/// Longest legal dominating sequence whose self-footprinted set is exactly
/// `independent`; nullopt when no such sequence exists.
std::optional<GrundyResult> gamma_gr_given_I(const Graph& g, const VertexSet& independent,
                                             const OracleOptions& options = {});

/// Maximum of gamma_gr_given_I over independent sets containing u.
int gamma_gr_rooted(const Graph& g, Vertex u, const OracleOptions& options = {});

/// Enumerates every legal dominating sequence (plain DFS, no memo). Returning
/// false from `visit` stops the enumeration.
void for_each_legal_sequence(const Graph& g, const std::function<bool(const VertexSequence&)>& visit,
                             const OracleOptions& options = {});

}  // namespace grundy
