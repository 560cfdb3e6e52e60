#include "prismdom/prism.hpp"

#include <stdexcept>

namespace prismdom {

PrismGraph build_prism(const Graph& g, const Permutation& pi) {
  const int n = g.n();
  if (pi.n() != n)
    throw std::invalid_argument("permutation size " + std::to_string(pi.n()) +
                                " does not match graph order " + std::to_string(n));
  if (2 * n > VertexSet::max_vertices)
    throw std::invalid_argument("prism of a graph with n > 32 is not supported");

  std::vector<Edge> edges = g.edges();
  edges.reserve(static_cast<std::size_t>(2 * g.m() + n));
  for (auto [u, v] : g.edges()) edges.push_back({u + n, v + n});
  for (int v = 0; v < n; ++v) edges.push_back({v, n + pi.apply(v)});
  return PrismGraph{g, pi, Graph(2 * n, edges)};
}

VertexSet mirror_set(const PrismGraph& pr, VertexSet s, MirrorDirection dir) {
  const int n = pr.base.n();
  const VertexSet copy1 = VertexSet::first_n(n);
  const VertexSet copy2 = pr.combined.vertices().and_not(copy1);
  VertexSet out;
  if (dir == MirrorDirection::copy1_to_copy2) {
    if (!copy1.contains(s))
      throw std::invalid_argument("mirror_set: set is not contained in copy 1");
    s.for_each([&](int v) { out.set(n + pr.pi.apply(v)); });
  } else {
    if (!copy2.contains(s))
      throw std::invalid_argument("mirror_set: set is not contained in copy 2");
    s.for_each([&](int idx) { out.set(pr.pi.invert(idx - n)); });
  }
  return out;
}

int mirror_overlap(const PrismGraph& pr, int u) {
  const int n = pr.base.n();
  if (u < 0 || u >= n)
    throw std::invalid_argument("mirror_overlap: vertex " + std::to_string(u) +
                                " is not a copy-1 vertex");
  return (pr.combined.closed_neighborhood(u) & pr.combined.closed_neighborhood(n + u))
      .count();
}

}  // namespace prismdom
