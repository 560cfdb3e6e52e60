#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prismdom/graph.hpp"
#include "prismdom/permutation.hpp"
#include "prismdom/prism.hpp"
#include "prismdom/proportion.hpp"
#include "prismdom/solver.hpp"
#include "prismdom/sweep.hpp"

namespace prismdom {

enum class Verdict { holds, counterexample, preconditions_unmet };
std::string_view to_string(Verdict v);

// Self-contained record of a failed claim: enough to rebuild the instance
// from scratch and reproduce the discrepancy with a fresh solver run.
struct Certificate {
  enum class Quantity {
    base_gamma,           // minimum dominating-set size of `graph`
    base_gamma_p,         // minimum p-dominating size of `graph`
    prism_gamma,          // same, on the prism of (graph, pi)
    prism_gamma_p,
    prism_profile_value,  // coverage profile entry best[profile_k] of the prism
  };
  enum class Relation { eq, ne, le, ge };  // what the claim asserted: value REL bound

  Graph graph;
  std::optional<Permutation> pi;
  std::optional<Proportion> p;
  Quantity quantity = Quantity::prism_gamma_p;
  Relation relation = Relation::eq;
  int profile_k = -1;
  long long bound = 0;  // claimed value or bound
  long long value = 0;  // what the solver computed instead
  VertexSet witness;    // a set attaining `value`, when one applies
  std::string note;
};

// Recomputes the certificate quantity from scratch and confirms the recorded
// discrepancy: same value, still violating the claimed relation.
bool reverify(const Certificate& c);

struct VerificationReport {
  std::string claim;
  std::string instance;
  std::string mode;
  Verdict verdict = Verdict::holds;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;

  // prop4 only: the biconditional under each way of choosing the max-degree
  // vertex when several attain the maximum
  struct Prop4Side {
    int vertex = -1;   // vertex the degree condition was evaluated at
    int overlap = -1;  // |N[u] ∩ N[u']| there
    bool condition = false;
    bool holds = false;
    bool sufficiency_violated = false;  // condition true, value not 2
  };
  std::optional<Prop4Side> fixed_argmax;
  std::optional<Prop4Side> existential_argmax;
  int threshold_value = -1;  // prism value at p=(n+gamma)/(2n), where relevant
};

// --- individual claims ------------------------------------------------------

// gamma = 1 graphs: prism value is 1 up to (n+1)/(2n), then 2. Checked for
// every permutation in `mode`, at every rational class of (0,1].
VerificationReport verify_prop1(const Graph& g, const SweepMode& mode,
                                int cap = kDefaultExhaustiveCap);

// prism value at (n+gamma)/(2n) never exceeds gamma
VerificationReport verify_prop2(const Graph& g, const Permutation& pi);

// paths and cycles meet the prop2 bound with equality, gamma = ceil(n/3)
VerificationReport verify_prop3(Family family, int n, const SweepMode& mode,
                                int cap = kDefaultExhaustiveCap);

// prism value at (n+gamma)/(2n) is 1 iff gamma is 1
VerificationReport verify_remark(const Graph& g, const Permutation& pi);

// prism value at (n+gamma)/(2n) is 2 iff gamma=2, or gamma>=3 and the
// max-degree condition holds; evaluated under both argmax interpretations
VerificationReport verify_prop4(const Graph& g, const Permutation& pi);

// gamma_p(G) <= gamma_p(piG) <= 2 gamma_p(G); the default grid is every
// breakpoint of either step function, which covers all p in (0,1]
VerificationReport verify_prop5(const Graph& g, const Permutation& pi,
                                const std::vector<Proportion>& grid = {});

// gamma(G) <= gamma(piG) <= 2 gamma(G)
VerificationReport verify_gu_bound(const Graph& g, const Permutation& pi);

// M independent, all of maximum degree, open neighborhoods pairwise disjoint
bool check_prop6_preconditions(const Graph& g, VertexSet m);

// under those preconditions: prism profile hits i(max_degree+2) at i, and the
// step function equals i on the i-th interval, for every permutation in mode
VerificationReport verify_prop6(const Graph& g, VertexSet m, const SweepMode& mode,
                                int cap = kDefaultExhaustiveCap);

// Max-degree independent set whose members pair up through exactly one shared
// neighbor; members of different pairs share none.
struct PairedMaxSet {
  VertexSet members;
  std::vector<std::pair<int, int>> pairs;  // (r, s) with r < s
};

struct PairingResult {
  std::optional<PairedMaxSet> pairing;
  std::string error;   // set when the pairing could not be built
  int offending = -1;  // vertex that broke the requirement
};
PairingResult check_prop7_preconditions(const Graph& g, VertexSet m);

enum class PackingCase { identity, pair_swap, mapped_into_set };
std::string_view to_string(PackingCase c);

// identity: pi = 1. pair_swap: pi swaps the two members of every pair.
// mapped_into_set: pi != 1, not a full pair swap, and pi maps M into M.
std::optional<PackingCase> classify_packing_case(const PairedMaxSet& pairing,
                                                 const Permutation& pi);

// find_T gave up before completing; carries the partial set it had built.
class TwoPackingFailure : public std::runtime_error {
 public:
  TwoPackingFailure(const std::string& what, VertexSet partial)
      : std::runtime_error(what), partial_(partial) {}
  VertexSet partial() const { return partial_; }

 private:
  VertexSet partial_;
};

// Builds T: |M| prism vertices from M and the copy-2 images of M, pairwise
// non-adjacent with pairwise disjoint closed neighborhoods. Requires pi to
// fall in one of the three supported cases.
VertexSet find_two_packing(const Graph& g, const PairedMaxSet& pairing,
                           const Permutation& pi);

struct PackingAudit {
  bool ok = true;
  std::string problem;
};

// Independent recheck of the find_two_packing postconditions, straight from
// the prism adjacency: size, membership, pairwise non-adjacency, pairwise
// disjoint closed neighborhoods, every member covering max_degree+2 vertices.
PackingAudit audit_two_packing(const PrismGraph& pr, VertexSet t, int expected_size);

// runs find_two_packing, audits it, then checks the interval claim the same
// way as prop6, using prefixes of T as explicit coverage witnesses
VerificationReport verify_prop7(const Graph& g, VertexSet m, const Permutation& pi);

// Runs a per-permutation check over every permutation of a mode, stopping at
// the first failure. `f` maps a Permutation to a VerificationReport.
template <typename PerPermutation>
VerificationReport verify_for_permutations(int n, const SweepMode& mode, int cap,
                                           PerPermutation&& f) {
  std::vector<Permutation> perms = permutations_for(n, mode, cap);
  VerificationReport rep;
  for (const Permutation& pi : perms) {
    rep = f(pi);
    if (rep.verdict != Verdict::holds) {
      rep.mode = mode.str();
      return rep;
    }
  }
  rep.mode = mode.str() + " (" + std::to_string(perms.size()) + " permutations)";
  return rep;
}

// --- named instances --------------------------------------------------------

namespace instances {

// v1, v2 of maximum degree, paired through the single shared neighbor c,
// with pendant leaves keeping the degrees equal: edges v1-c, v2-c, v1-d1,
// v2-d2 on vertices {v1=0, v2=1, c=2, d1=3, d2=4}
Graph gadget();
Graph two_gadget();  // two disjoint gadgets, pairs (0,1) and (5,6)
Graph two_star4();   // two disjoint 4-vertex stars, centers 0 and 4

std::optional<Graph> by_name(std::string_view name);

}  // namespace instances

}  // namespace prismdom
