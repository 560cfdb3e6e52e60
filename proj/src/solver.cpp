#include "prismdom/solver.hpp"

#include <stdexcept>

#include "prismdom/errors.hpp"

namespace prismdom {

namespace {

struct BranchChoice {
  int vertex = -1;
  int gain = 0;       // newly covered vertices the best candidate brings
  VertexSet reach;    // everything still reachable from here
};

BranchChoice pick_branch(const Graph& g, VertexSet cands, VertexSet covered) {
  BranchChoice c;
  c.reach = covered;
  cands.for_each([&](int v) {
    VertexSet nv = g.closed_neighborhood(v);
    c.reach |= nv;
    int gn = nv.and_not(covered).count();
    if (gn > c.gain) {
      c.gain = gn;
      c.vertex = v;
    }
  });
  return c;
}

// Decision form: can at most `budget` picks from `cands` raise the covered
// set to `target` vertices?
bool reach_target(const Graph& g, VertexSet cands, VertexSet covered, int budget,
                  int target) {
  if (covered.count() >= target) return true;
  if (budget <= 0) return false;
  BranchChoice c = pick_branch(g, cands, covered);
  if (c.reach.count() < target) return false;
  if (covered.count() + budget * c.gain < target) return false;
  VertexSet rest = cands;
  rest.reset(c.vertex);
  if (reach_target(g, rest, covered | g.closed_neighborhood(c.vertex), budget - 1,
                   target))
    return true;
  return reach_target(g, rest, covered, budget, target);
}

int greedy_size(const Graph& g, int target) {
  VertexSet covered;
  int k = 0;
  while (covered.count() < target) {
    BranchChoice c = pick_branch(g, g.vertices(), covered);
    covered |= g.closed_neighborhood(c.vertex);
    ++k;
  }
  return k;
}

// smallest k whose best coverage reaches `target`; target in 1..n
int min_size_for_target(const Graph& g, int target) {
  int ub = greedy_size(g, target);
  int dmax = max_degree(g).degree;
  int lb = (target + dmax) / (dmax + 1);
  for (int k = std::max(lb, 1); k < ub; ++k)
    if (reach_target(g, g.vertices(), VertexSet{}, k, target)) return k;
  return ub;
}

// Builds the lexicographically smallest `size`-set reaching `target`:
// fix the smallest feasible vertex at each slot, restricting later slots to
// larger indices.
VertexSet lex_min_witness(const Graph& g, int size, int target) {
  VertexSet chosen, covered;
  int from = 0;
  for (int slot = 0; slot < size; ++slot) {
    bool placed = false;
    for (int v = from; v < g.n() && !placed; ++v) {
      VertexSet tail = g.vertices().and_not(VertexSet::first_n(v + 1));
      if (reach_target(g, tail, covered | g.closed_neighborhood(v), size - slot - 1,
                       target)) {
        chosen.set(v);
        covered |= g.closed_neighborhood(v);
        from = v + 1;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("witness reconstruction failed");
  }
  return chosen;
}

void require_nonempty(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("operation requires n >= 1");
}

// Optimization form for the profile: track the best coverage seen for this
// budget; prune against the incumbent.
void best_coverage_search(const Graph& g, VertexSet cands, VertexSet covered,
                          int budget, VertexSet chosen, int& best,
                          VertexSet& best_set) {
  int cov = covered.count();
  if (cov > best) {
    best = cov;
    best_set = chosen;
  }
  if (budget <= 0 || best == g.n()) return;
  BranchChoice c = pick_branch(g, cands, covered);
  if (c.vertex < 0) return;
  if (c.reach.count() <= best) return;
  if (cov + budget * c.gain <= best) return;
  VertexSet rest = cands;
  rest.reset(c.vertex);
  VertexSet with = chosen;
  with.set(c.vertex);
  best_coverage_search(g, rest, covered | g.closed_neighborhood(c.vertex), budget - 1,
                       with, best, best_set);
  best_coverage_search(g, rest, covered, budget, chosen, best, best_set);
}

}  // namespace

bool is_p_dominating(const Graph& g, VertexSet s, Proportion p) {
  require_nonempty(g);
  return p.met_by(coverage(g, s), g.n());
}

int domination_number(const Graph& g) {
  require_nonempty(g);
  return min_size_for_target(g, g.n());
}

int partial_domination_number(const Graph& g, Proportion p) {
  require_nonempty(g);
  return min_size_for_target(g, p.min_coverage(g.n()));
}

DominationResult solve_domination(const Graph& g) {
  require_nonempty(g);
  int k = min_size_for_target(g, g.n());
  return {k, lex_min_witness(g, k, g.n())};
}

DominationResult solve_partial_domination(const Graph& g, Proportion p) {
  require_nonempty(g);
  int target = p.min_coverage(g.n());
  int k = min_size_for_target(g, target);
  return {k, lex_min_witness(g, k, target)};
}

int partial_domination_oracle(const Graph& g, Proportion p, int cap) {
  require_nonempty(g);
  if (g.n() > cap || g.n() > 62)
    throw CapExceeded("oracle refuses n=" + std::to_string(g.n()) + " above cap " +
                      std::to_string(std::min(cap, 62)));
  const int n = g.n();
  const int target = p.min_coverage(n);
  const std::uint64_t limit = 1ull << n;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t s = (1ull << k) - 1;
    while (s < limit) {
      if (coverage(g, VertexSet{s}) >= target) return k;
      std::uint64_t c = s & (~s + 1);  // Gosper: next mask with k bits
      std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n;  // the full vertex set always covers everything
}

CoverageProfile coverage_profile(const Graph& g) {
  require_nonempty(g);
  CoverageProfile prof;
  prof.n = g.n();
  prof.best.assign(static_cast<std::size_t>(g.n()) + 1, 0);
  prof.witness.assign(static_cast<std::size_t>(g.n()) + 1, VertexSet{});
  for (int k = 1; k <= g.n(); ++k) {
    auto ks = static_cast<std::size_t>(k);
    prof.best[ks] = prof.best[ks - 1];
    prof.witness[ks] = prof.witness[ks - 1];
    if (prof.best[ks] == g.n()) continue;  // saturated, stays at n
    best_coverage_search(g, g.vertices(), VertexSet{}, k, VertexSet{}, prof.best[ks],
                         prof.witness[ks]);
  }
  return prof;
}

int profile_min_size(const CoverageProfile& profile, Proportion p) {
  const int target = p.min_coverage(profile.n);
  for (int k = 1; k <= profile.n; ++k)
    if (profile.best[static_cast<std::size_t>(k)] >= target) return k;
  throw std::logic_error("coverage profile does not reach its own vertex count");
}

}  // namespace prismdom
