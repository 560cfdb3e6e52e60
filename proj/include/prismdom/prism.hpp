#pragma once

#include "prismdom/graph.hpp"
#include "prismdom/permutation.hpp"

namespace prismdom {

// Two copies of a base graph joined by the matching {v, n + pi(v)}. Copy-1
// vertex v keeps its index; its copy-2 counterpart v' is index n + v. Base
// and permutation are kept alongside the combined graph because copy
// restriction and mirror operations need both views.
struct PrismGraph {
  Graph base;
  Permutation pi;
  Graph combined;  // 2n vertices, 2m + n edges
};

PrismGraph build_prism(const Graph& g, const Permutation& pi);

enum class MirrorDirection { copy1_to_copy2, copy2_to_copy1 };

// copy1_to_copy2 sends v to n + pi(v); copy2_to_copy1 sends n + w to
// pi^-1(w). The input must lie entirely in the source copy.
VertexSet mirror_set(const PrismGraph& pr, VertexSet s, MirrorDirection dir);

// |N[u] ∩ N[u']| in the prism, for copy-1 vertex u and its mirror u' = n + u.
// The only candidates are the two matching endpoints, so this is 0, 1 or 2.
int mirror_overlap(const PrismGraph& pr, int u);

}  // namespace prismdom
