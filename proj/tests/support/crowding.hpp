// Interval bound between self-footprinters on power graphs: if i and i+t are
// the only self-footprinters in [i, i+t] (indices mod n on cycles) and
// m+1 <= t <= n, then at most t-m sequence vertices lie in [i, i+t).
#pragma once

#include <algorithm>
#include <vector>

#include "grundy/graph.hpp"

namespace brute {

struct CrowdingTally {
  long long windows = 0;
  long long violations = 0;
};

inline void check_crowding(int n, int m, bool circular, const std::vector<grundy::Vertex>& seq,
                           const grundy::VertexSet& self_set, CrowdingTally& tally) {
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0), self(static_cast<std::size_t>(n) + 1, 0);
  for (grundy::Vertex v : seq) used[v] = 1;
  for (grundy::Vertex v : self_set) self[v] = 1;
  auto at = [&](int x) { return circular ? (x - 1) % n + 1 : x; };
  for (grundy::Vertex i : self_set) {
    for (int t = m + 1; t <= n; ++t) {
      if (!circular && i + t > n) break;
      const int end = at(i + t);
      if (!self[end]) continue;
      bool only_ends = true;
      for (int s = 1; s < t && only_ends; ++s) only_ends = !self[at(i + s)];
      if (!only_ends) continue;
      int count = 0;
      for (int s = 0; s < t; ++s) count += used[at(i + s)];
      ++tally.windows;
      if (count > t - m) ++tally.violations;
    }
  }
}

}  // namespace brute
