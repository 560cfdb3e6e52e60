#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "prismdom/graph.hpp"
#include "prismdom/permutation.hpp"
#include "prismdom/proportion.hpp"

namespace prismdom {

struct SweepMode {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  int count = 0;           // sampled only
  std::uint64_t seed = 0;  // sampled only

  static SweepMode exhaustive() { return {}; }
  static SweepMode sampled(int count, std::uint64_t seed) {
    return SweepMode{Kind::sampled, count, seed};
  }
  std::string str() const;
};

// Materializes the permutations a mode stands for (identity always first in
// sampled mode; lexicographic order in exhaustive mode).
std::vector<Permutation> permutations_for(int n, const SweepMode& mode,
                                          int cap = kDefaultExhaustiveCap);

struct SweepResult {
  int n = 0;
  Proportion p{1, 1};
  SweepMode mode;
  int base_value = 0;  // minimum p-dominating size of the base graph itself
  std::map<int, long long> histogram;  // prism value -> number of permutations
  int min_value = 0;
  int max_value = 0;
  Permutation witness_min;  // first permutation attaining each extreme
  Permutation witness_max;
};

// Evaluates the minimum p-dominating size over the prism for every
// permutation the mode yields. `jobs` > 1 spreads the evaluations over
// threads; the result is identical regardless of job count.
SweepResult sweep(const Graph& g, Proportion p, const SweepMode& mode,
                  int cap = kDefaultExhaustiveCap, int jobs = 1);

enum class Classification { fixer, doubler, fixer_and_doubler, neither };
std::string_view to_string(Classification c);

Classification classify(const SweepResult& r);
Classification classify(const Graph& g, Proportion p, const SweepMode& mode,
                        int cap = kDefaultExhaustiveCap, int jobs = 1);

}  // namespace prismdom
