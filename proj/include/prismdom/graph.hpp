#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prismdom/proportion.hpp"
#include "prismdom/vertex_set.hpp"

namespace prismdom {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency.
// Construction validates (range, no self-loops, no duplicates); afterwards
// every query is a handful of bit operations.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return m_; }

  bool adjacent(int u, int v) const;
  VertexSet neighbors(int v) const;            // open neighborhood
  VertexSet closed_neighborhood(int v) const;  // neighbors plus v itself
  int degree(int v) const;
  VertexSet vertices() const { return VertexSet::first_n(n_); }

  std::vector<Edge> edges() const;  // u < v, ascending

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> closed_;
};

// N[S] and |N[S]|
VertexSet covered_set(const Graph& g, VertexSet s);
int coverage(const Graph& g, VertexSet s);

struct MaxDegree {
  int degree = 0;
  VertexSet argmax;  // every vertex attaining the maximum
};
MaxDegree max_degree(const Graph& g);

bool is_independent(const Graph& g, VertexSet m);
bool is_connected(const Graph& g);
int min_degree(const Graph& g);

// b's vertices are relabelled to a.n() .. a.n()+b.n()-1
Graph disjoint_union(const Graph& a, const Graph& b);

// --- deterministic generators ---------------------------------------------

enum class Family { path, cycle, complete, star, random };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

// Edge probability for random generation; unlike Proportion this may be 0.
struct Density {
  long long num = 1;
  long long den = 2;
  static Density parse(std::string_view text);
  std::string str() const;
};

Graph generate_family(Family kind, int n,
                      std::optional<std::uint64_t> seed = std::nullopt,
                      std::optional<Density> density = std::nullopt);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int n);  // center 0, leaves 1..n-1

// Each pair {u,v}, u < v taken in lexicographic order, draws from a
// SplitMix64 stream seeded with `seed` and becomes an edge with exact
// probability num/den. Same seed, same edge set, on every platform.
Graph make_random(int n, std::uint64_t seed, Density density);

// --- edge-list files --------------------------------------------------------
// Line 1 is `n m`; then m lines `u v` with u < v. Lines starting with '#'
// are comments. `one_indexed` shifts vertex labels on both read and write.

Graph read_edge_list(std::istream& in, bool one_indexed = false);
Graph load_edge_list(const std::string& path, bool one_indexed = false);
void write_edge_list(std::ostream& out, const Graph& g, bool one_indexed = false);

}  // namespace prismdom
