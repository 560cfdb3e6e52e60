#pragma once

#include <vector>

#include "prismdom/graph.hpp"
#include "prismdom/proportion.hpp"

namespace prismdom {

inline constexpr int kDefaultOracleCap = 16;

// den*|N[S]| >= num*n, evaluated in integers
bool is_p_dominating(const Graph& g, VertexSet s, Proportion p);

// Exact minimum sizes. Branch and bound over vertex inclusion: branch on the
// vertex covering the most still-uncovered vertices, start from a greedy
// upper bound, prune when the remaining budget cannot reach the target.
int domination_number(const Graph& g);
int partial_domination_number(const Graph& g, Proportion p);

struct DominationResult {
  int size = 0;
  VertexSet witness;  // lexicographically smallest optimum
};
DominationResult solve_domination(const Graph& g);
DominationResult solve_partial_domination(const Graph& g, Proportion p);

// Independent reference: enumerates every subset in increasing cardinality
// order, no pruning. Refuses graphs above `cap` vertices.
int partial_domination_oracle(const Graph& g, Proportion p, int cap = kDefaultOracleCap);

// best[k] = max over k-subsets S of |N[S]|, with one witness per k. The
// minimum size for any proportion falls out as a step read.
struct CoverageProfile {
  int n = 0;
  std::vector<int> best;        // size n+1, best[0] = 0
  std::vector<VertexSet> witness;
};

CoverageProfile coverage_profile(const Graph& g);

// min k >= 1 with best[k]/n >= p
int profile_min_size(const CoverageProfile& profile, Proportion p);

}  // namespace prismdom
