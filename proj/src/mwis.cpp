#include "grundy/mwis.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

void check_shape(int n, int m, const WeightVector& w, const char* who) {
  if (n < 1) throw InputError(std::string(who) + ": n must be >= 1");
  if (m < 1) throw InputError(std::string(who) + ": m must be >= 1");
  if (static_cast<int>(w.size()) != n) {
    throw InputError(std::string(who) + ": " + std::to_string(w.size()) + " weights for n=" + std::to_string(n));
  }
}

bool better(const MwisResult& a, const MwisResult& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.set < b.set;
}

// MWIS of the path-power instance induced on vertices lo..hi (inclusive);
// an empty range yields the empty set.
MwisResult interval_mwis(int lo, int hi, int m, const WeightVector& w) {
  MwisResult out;
  if (lo > hi) return out;
  const int len = hi - lo + 1;
  // suffix[k]: best weight using vertices lo+k..hi.
  std::vector<Weight> suffix(static_cast<std::size_t>(len) + m + 2, 0);
  for (int k = len - 1; k >= 0; --k) {
    const Weight take = w[lo + k - 1] + suffix[k + m + 1];
    suffix[k] = std::max(suffix[k + 1], take);
  }
  out.weight = suffix[0];
  // Forward reconstruction: stop as soon as the rest can be empty, else take
  // the smallest vertex that still completes an optimum.
  int k = 0;
  while (k < len && suffix[k] != 0) {
    int j = k;
    while (w[lo + j - 1] + suffix[j + m + 1] != suffix[k]) ++j;
    out.set.push_back(lo + j);
    k = j + m + 1;
  }
  return out;
}

}  // namespace

MwisResult mwis_path_power(int n, int m, const WeightVector& w) {
  check_shape(n, m, w, "mwis_path_power");
  return interval_mwis(1, n, m, w);
}

MwisResult mwis_cycle_power(int n, int m, const WeightVector& w) {
  check_shape(n, m, w, "mwis_cycle_power");
  if (n < 3) throw InputError("mwis_cycle_power: n must be >= 3");
  const int window = std::min(m + 1, n);
  // No vertex of the window: vertices m+2..n never wrap onto each other.
  MwisResult best = interval_mwis(window + 1, n, m, w);
  for (Vertex v = 1; v <= window; ++v) {
    // Anchor v: the arc left after removing N[v] is v+m+1..v+n-m-1.
    MwisResult cand = interval_mwis(v + m + 1, v + n - m - 1, m, w);
    cand.weight += w[v - 1];
    cand.set.insert(cand.set.begin(), v);
    if (better(cand, best)) best = std::move(cand);
  }
  return best;
}

MwisResult best_pair_cycle_power(int n, int m, const WeightVector& w) {
  check_shape(n, m, w, "best_pair_cycle_power");
  if (2 * (m + 1) > n) {
    throw InputError("best_pair_cycle_power: no independent pair in C_" + std::to_string(n) + "^" +
                     std::to_string(m));
  }
  std::optional<MwisResult> best;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const int d = j - i;
      if (std::min(d, n - d) <= m) continue;
      const Weight value = w[i - 1] + w[j - 1];
      if (!best || value > best->weight) best = MwisResult{value, {i, j}};
    }
  }
  return *best;
}

}  // namespace grundy
