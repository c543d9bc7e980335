#pragma once

#include <cstdint>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

using Weight = std::int64_t;

/// weights[i-1] is the weight of vertex i. Negative weights are allowed.
using WeightVector = std::vector<Weight>;

struct MwisResult {
  Weight weight = 0;
  VertexSet set;
};

// All solvers break ties towards the lexicographically smallest sorted
// member list, a proper prefix counting as smaller than its extensions (so
// the empty set wins any tie it takes part in).

/// Maximum-weight independent set of P_n^m, O(n) dynamic program.
MwisResult mwis_path_power(int n, int m, const WeightVector& w);

/// Maximum-weight independent set of C_n^m. At most one vertex of the window
/// [1, m+1] can be chosen; each choice (or none) leaves a path-power instance
/// on an arc.
MwisResult mwis_cycle_power(int n, int m, const WeightVector& w);

/// Best independent pair of C_n^m; requires 2(m+1) <= n.
MwisResult best_pair_cycle_power(int n, int m, const WeightVector& w);

}  // namespace grundy
