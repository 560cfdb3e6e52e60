#include "prismdom/sweep.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "prismdom/prism.hpp"
#include "prismdom/solver.hpp"

namespace prismdom {

std::string SweepMode::str() const {
  if (kind == Kind::exhaustive) return "exhaustive";
  return "sampled(count=" + std::to_string(count) + ", seed=" + std::to_string(seed) +
         ")";
}

std::vector<Permutation> permutations_for(int n, const SweepMode& mode, int cap) {
  if (mode.kind == SweepMode::Kind::exhaustive) return enumerate_permutations(n, cap);
  return sample_permutations(n, mode.count, mode.seed);
}

SweepResult sweep(const Graph& g, Proportion p, const SweepMode& mode, int cap,
                  int jobs) {
  std::vector<Permutation> perms = permutations_for(g.n(), mode, cap);
  std::vector<int> values(perms.size());
  auto eval_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      values[i] = partial_domination_number(build_prism(g, perms[i]).combined, p);
  };
  if (jobs <= 1 || perms.size() < 2) {
    eval_range(0, perms.size());
  } else {
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                perms.size());
    std::size_t chunk = (perms.size() + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk;
      std::size_t hi = std::min(perms.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(eval_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  SweepResult r;
  r.n = g.n();
  r.p = p;
  r.mode = mode;
  r.base_value = partial_domination_number(g, p);
  r.min_value = std::numeric_limits<int>::max();
  r.max_value = std::numeric_limits<int>::min();
  // strict comparisons keep the first witness per extreme, so the result does
  // not depend on how the evaluation was split up
  for (std::size_t i = 0; i < perms.size(); ++i) {
    ++r.histogram[values[i]];
    if (values[i] < r.min_value) {
      r.min_value = values[i];
      r.witness_min = perms[i];
    }
    if (values[i] > r.max_value) {
      r.max_value = values[i];
      r.witness_max = perms[i];
    }
  }
  return r;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::fixer: return "Fixer";
    case Classification::doubler: return "Doubler";
    case Classification::fixer_and_doubler: return "FixerAndDoubler";
    case Classification::neither: return "Neither";
  }
  return "?";
}

Classification classify(const SweepResult& r) {
  const bool fixer = r.min_value == r.base_value && r.max_value == r.base_value;
  const bool doubler =
      r.min_value == 2 * r.base_value && r.max_value == 2 * r.base_value;
  if (fixer && doubler) return Classification::fixer_and_doubler;  // needs base 0: never
  if (fixer) return Classification::fixer;
  if (doubler) return Classification::doubler;
  return Classification::neither;
}

Classification classify(const Graph& g, Proportion p, const SweepMode& mode, int cap,
                        int jobs) {
  return classify(sweep(g, p, mode, cap, jobs));
}

}  // namespace prismdom
