#include "grundy/closed.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "grundy/errors.hpp"

namespace grundy {

IndependentSetRecord::IndependentSetRecord(VertexSet members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

namespace {

std::string str(int x) { return std::to_string(x); }

Vertex wrap(int x, int n) { return ((x - 1) % n + n) % n + 1; }

void require_cycle_shape(int n, int m, const char* who) {
  if (m < 1 || 2 * (m + 1) > n) {
    throw InputError(std::string(who) + ": needs m >= 1 and 2(m+1) <= n (n=" + str(n) + ", m=" + str(m) + ")");
  }
}

void require_path_shape(int n, int m, const char* who) {
  if (m < 1 || m + 2 > n) {
    throw InputError(std::string(who) + ": needs m >= 1 and m+2 <= n (n=" + str(n) + ", m=" + str(m) + ")");
  }
}

void require_independent(int n, int m, const IndependentSetRecord& i, bool circular, const char* who) {
  if (i.empty()) throw InputError(std::string(who) + ": independent set is empty");
  for (Vertex v : i.members()) {
    if (v < 1 || v > n) throw InputError(std::string(who) + ": vertex " + str(v) + " out of range");
  }
  const auto& s = i.members();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const int d = s[b] - s[a];
      const int dist = circular ? std::min(d, n - d) : d;
      if (dist <= m) {
        throw InputError(std::string(who) + ": vertices " + str(s[a]) + " and " + str(s[b]) + " are adjacent");
      }
    }
  }
}

void require_profile(int n, const GammaProfile& profile, const char* who) {
  if (n < 1) throw InputError(std::string(who) + ": n must be >= 1");
  if (profile.size() != n) {
    throw InputError(std::string(who) + ": profile has " + str(profile.size()) + " entries, expected " + str(n));
  }
}

// Complete main factor: the join of the parts, won by the largest one.
XJoinSolveResult join_result(int n, const GammaProfile& profile) {
  XJoinSolveResult out;
  Vertex best = 1;
  for (Vertex v = 2; v <= n; ++v) {
    if (profile[v] > profile[best]) best = v;
  }
  out.gamma = profile[best];
  out.argmax_I = IndependentSetRecord({best});
  out.main_sequence = VertexSequence{best};
  out.diagnostics.notes.push_back("main factor is complete; join rule");
  return out;
}

int lifted_length(const XJoinSolveResult& r, const GammaProfile& profile) {
  int len = static_cast<int>(r.main_sequence.size());
  for (Vertex v : r.argmax_I.members()) len += profile[v] - 1;
  return len;
}

// MWIS of P^m restricted to lo..hi, reported in the original labels.
MwisResult path_mwis_on(int lo, int hi, int m, const WeightVector& w) {
  if (lo > hi) return {};
  WeightVector sub(w.begin() + (lo - 1), w.begin() + hi);
  MwisResult r = mwis_path_power(hi - lo + 1, m, sub);
  for (Vertex& v : r.set) v += lo - 1;
  return r;
}

// Best set of the path family under weights w: fix the first member a in
// [1, m+1] and the last b in [n-m, n], fill the gap optimally.
MwisResult path_family_mwis(int n, int m, const WeightVector& w) {
  std::optional<MwisResult> best;
  for (Vertex a = 1; a <= m + 1; ++a) {
    for (Vertex b = std::max(n - m, a); b <= n; ++b) {
      if (b != a && b - a <= m) continue;
      MwisResult cand;
      if (a == b) {
        cand = {w[a - 1], {a}};
      } else {
        cand = path_mwis_on(a + m + 1, b - m - 1, m, w);
        cand.weight += w[a - 1] + w[b - 1];
        cand.set.insert(cand.set.begin(), a);
        cand.set.push_back(b);
      }
      if (!best || cand.weight > best->weight || (cand.weight == best->weight && cand.set < best->set)) {
        best = std::move(cand);
      }
    }
  }
  return *best;
}

}  // namespace

int gamma_structured(const StructuredSpec& spec) {
  const int n = spec.n;
  const int m = spec.m;
  if (n < 1 || m < 1) throw InputError("gamma_structured: needs n >= 1 and m >= 1");
  switch (spec.kind) {
    case StructuredKind::cycle_power:
      if (n < 3) throw InputError("gamma_structured: cycle powers need n >= 3");
      return 2 * (m + 1) > n ? 1 : n - 2 * m;
    case StructuredKind::path_power:
      return m + 2 > n ? 1 : n - m;
    case StructuredKind::complete:
      return 1;
    case StructuredKind::edgeless:
      return n;
    case StructuredKind::co_path:
      if (n < 4) throw UnsupportedError("gamma_structured: co_path with n=" + str(n) + " is not closed-form");
      return 3;
    case StructuredKind::co_cycle:
      if (n < 5) throw UnsupportedError("gamma_structured: co_cycle with n=" + str(n) + " is not closed-form");
      return 3;
  }
  throw InputError("gamma_structured: unknown kind");
}

VertexSequence interval_sequence(Vertex i, Vertex j, int n, bool circular) {
  if (i < 1 || i > n || j < 1 || j > n) {
    throw InputError("interval_sequence: endpoints " + str(i) + "," + str(j) + " outside [1," + str(n) + "]");
  }
  std::vector<Vertex> out;
  if (!circular) {
    if (i > j) throw InputError("interval_sequence: linear run needs i <= j");
    for (Vertex v = i; v <= j; ++v) out.push_back(v);
  } else {
    for (Vertex v = i;; v = wrap(v + 1, n)) {
      out.push_back(v);
      if (v == j) break;
    }
  }
  return VertexSequence(std::move(out));
}

VertexSequence build_S_C(int n, int m, const IndependentSetRecord& i) {
  require_cycle_shape(n, m, "build_S_C");
  require_independent(n, m, i, true, "build_S_C");
  IndependentSetRecord set = i;
  if (set.size() == 1) set = IndependentSetRecord({set.min_elem(), wrap(set.min_elem() + m + 1, n)});
  const auto& s = set.members();
  const int p = set.size();

  VertexSequence out;
  for (int j = 0; j + 1 < p; ++j) out = out + interval_sequence(s[j], s[j + 1] - (m + 1), n, false);
  // Closing arc from s_p+m+1 round to s_1-1, walked backwards.
  const int closing = s.front() + n - s.back() - m - 1;
  if (closing > 0) {
    const Vertex from = wrap(s.back() + m + 1, n);
    out = out + interval_sequence(from, wrap(from + closing - 1, n), n, true).reversed();
  }
  out.append(s.back());
  return out;
}

bool in_path_family(int n, int m, const IndependentSetRecord& i) {
  return !i.empty() && i.min_elem() <= m + 1 && i.max_elem() >= n - m;
}

VertexSequence build_S_P(int n, int m, const IndependentSetRecord& i) {
  require_path_shape(n, m, "build_S_P");
  require_independent(n, m, i, false, "build_S_P");
  if (!in_path_family(n, m, i)) {
    throw FamilyError("build_S_P: set needs min <= m+1 and max >= n-m");
  }
  const auto& s = i.members();
  VertexSequence out;
  for (std::size_t j = 0; j + 1 < s.size(); ++j) out = out + interval_sequence(s[j], s[j + 1] - (m + 1), n, false);
  out.append(s.back());
  return out;
}

int gamma_given_I_cycle_power(int n, int m, const IndependentSetRecord& i) {
  require_cycle_shape(n, m, "gamma_given_I_cycle_power");
  require_independent(n, m, i, true, "gamma_given_I_cycle_power");
  return i.size() == 1 ? n - 2 * m : n - i.size() * m;
}

int gamma_given_I_path_power(int n, int m, const IndependentSetRecord& i) {
  require_path_shape(n, m, "gamma_given_I_path_power");
  require_independent(n, m, i, false, "gamma_given_I_path_power");
  if (!in_path_family(n, m, i)) {
    throw FamilyError("gamma_given_I_path_power: no closed form for sets with min > m+1 or max < n-m");
  }
  return i.max_elem() - i.min_elem() + 1 - (i.size() - 1) * m;
}

XJoinSolveResult solve_xjoin_cycle_power(int n, int m, const GammaProfile& profile) {
  require_profile(n, profile, "solve_xjoin_cycle_power");
  if (n < 3 || m < 1) throw InputError("solve_xjoin_cycle_power: needs n >= 3 and m >= 1");
  if (2 * (m + 1) > n) return join_result(n, profile);

  XJoinSolveResult out;
  auto& diag = out.diagnostics;
  for (Vertex v = 1; v <= n; ++v) diag.weights.push_back(profile[v] - (m + 1));
  const MwisResult best = mwis_cycle_power(n, m, diag.weights);
  diag.mwis_value = best.weight;
  if (best.set.size() >= 2) {
    out.gamma = static_cast<int>(best.weight) + n;
    out.argmax_I = IndependentSetRecord(best.set);
  } else {
    const MwisResult pair = best_pair_cycle_power(n, m, diag.weights);
    diag.notes.push_back("MWIS optimum has fewer than two vertices; best independent pair used");
    out.gamma = static_cast<int>(pair.weight) + n;
    out.argmax_I = IndependentSetRecord(pair.set);
  }
  out.main_sequence = build_S_C(n, m, out.argmax_I);
  int expected = n;
  for (Vertex v : out.argmax_I.members()) expected += profile[v] - (m + 1);
  if (expected != out.gamma || lifted_length(out, profile) != out.gamma) {
    throw InternalError("solve_xjoin_cycle_power: skeleton length disagrees with gamma");
  }
  return out;
}

XJoinSolveResult solve_xjoin_path_power(int n, int m, const GammaProfile& profile) {
  require_profile(n, profile, "solve_xjoin_path_power");
  if (m < 1) throw InputError("solve_xjoin_path_power: needs m >= 1");
  if (m + 2 > n) return join_result(n, profile);

  XJoinSolveResult out;
  auto& diag = out.diagnostics;
  auto family_value = [&](const IndependentSetRecord& s) {
    int value = s.max_elem() - s.min_elem() - s.size() * m + m + 1;
    for (Vertex v : s.members()) value += profile[v] - 1;
    return value;
  };

  if (n >= 2 * m + 3) {
    for (Vertex i = 1; i <= n; ++i) {
      if (i <= m + 1) diag.weights.push_back(profile[i] - i);
      else if (i <= n - m - 1) diag.weights.push_back(profile[i] - (m + 1));
      else diag.weights.push_back(profile[i] - (m + 1) + i);
    }
    const MwisResult best = mwis_path_power(n, m, diag.weights);
    diag.mwis_value = best.weight;
    IndependentSetRecord chosen(best.set);
    out.gamma = static_cast<int>(best.weight);
    if (!chosen.empty() && chosen.min_elem() >= m + 2 && diag.weights[0] == 0) {
      VertexSet repaired = chosen.members();
      repaired.insert(repaired.begin(), 1);
      chosen = IndependentSetRecord(repaired);
      diag.notes.push_back("optimum repaired into the path family by adjoining vertex 1");
    }
    if (!in_path_family(n, m, chosen)) {
      const MwisResult fallback = path_family_mwis(n, m, diag.weights);
      diag.notes.push_back("MWIS optimum outside the path family; constrained search used");
      chosen = IndependentSetRecord(fallback.set);
      out.gamma = static_cast<int>(fallback.weight);
    }
    out.argmax_I = chosen;
  } else {
    // alpha(P_n^m) = 2 here: scan singletons in [n-m, m+1] and pairs.
    std::optional<IndependentSetRecord> best;
    int best_value = 0;
    auto consider = [&](const IndependentSetRecord& s) {
      const int value = family_value(s);
      if (!best || value > best_value || (value == best_value && s.size() > best->size())) {
        best = s;
        best_value = value;
      }
    };
    for (Vertex a = 1; a <= m + 1; ++a) {
      if (a >= n - m) consider(IndependentSetRecord({a}));
      for (Vertex b = std::max(n - m, a + m + 1); b <= n; ++b) consider(IndependentSetRecord({a, b}));
    }
    out.argmax_I = *best;
    out.gamma = best_value;

    for (Vertex i = 1; i <= n; ++i) {
      if (i <= n - m - 1) diag.weights.push_back(profile[i] - i);
      else if (i <= m + 1) diag.weights.push_back(profile[i]);
      else diag.weights.push_back(profile[i] + i - (m + 1));
    }
    diag.mwis_value = mwis_path_power(n, m, diag.weights).weight;
    if (diag.mwis_value != out.gamma) {
      diag.notes.push_back("weighted cross-check disagrees: alpha_w=" + std::to_string(diag.mwis_value));
    }
  }

  out.main_sequence = build_S_P(n, m, out.argmax_I);
  if (family_value(out.argmax_I) != out.gamma || lifted_length(out, profile) != out.gamma) {
    throw InternalError("solve_xjoin_path_power: skeleton length disagrees with gamma");
  }
  return out;
}

int lex_gamma(PowerKind kind, int n, int m, int gamma_h) {
  if (gamma_h < 1) throw InputError("lex_gamma: gamma of H must be >= 1");
  if (kind == PowerKind::cycle) {
    require_cycle_shape(n, m, "lex_gamma");
    if (gamma_h >= m + 1) return (n / (m + 1)) * (gamma_h - (m + 1)) + n;
    return 2 * gamma_h + n - (2 * m + 2);
  }
  require_path_shape(n, m, "lex_gamma");
  if (gamma_h >= m + 1) return ((n + m) / (m + 1)) * (gamma_h - (m + 1)) + n + m;
  return 2 * gamma_h + n - m - 2;
}

}  // namespace grundy
