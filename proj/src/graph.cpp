#include "prismdom/graph.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "prismdom/rng.hpp"

namespace prismdom {

std::string to_string(VertexSet s, int index_base) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ", ";
    out += std::to_string(v + index_base);
    first = false;
  });
  return out + "}";
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0 || n > VertexSet::max_vertices)
    throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adj_[static_cast<std::size_t>(u)].test(v))
      throw std::invalid_argument("duplicate edge: " + std::to_string(u) + " " +
                                  std::to_string(v));
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
    ++m_;
  }
  closed_ = adj_;
  for (int v = 0; v < n_; ++v) closed_[static_cast<std::size_t>(v)].set(v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex out of range: " + std::to_string(v) +
                                " (n=" + std::to_string(n_) + ")");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u)].test(v);
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  return closed_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)].count();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
      if (v > u) out.push_back({u, v});
    });
  return out;
}

VertexSet covered_set(const Graph& g, VertexSet s) {
  if (!g.vertices().contains(s))
    throw std::invalid_argument("vertex set not within 0.." + std::to_string(g.n() - 1));
  VertexSet covered;
  s.for_each([&](int v) { covered |= g.closed_neighborhood(v); });
  return covered;
}

int coverage(const Graph& g, VertexSet s) { return covered_set(g, s).count(); }

MaxDegree max_degree(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("max degree of an empty graph");
  MaxDegree md;
  for (int v = 0; v < g.n(); ++v) md.degree = std::max(md.degree, g.degree(v));
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == md.degree) md.argmax.set(v);
  return md;
}

bool is_independent(const Graph& g, VertexSet m) {
  if (!g.vertices().contains(m))
    throw std::invalid_argument("vertex set not within 0.." + std::to_string(g.n() - 1));
  bool ok = true;
  m.for_each([&](int v) {
    if (g.neighbors(v).intersects(m)) ok = false;
  });
  return ok;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  VertexSet seen = VertexSet::of({0});
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    frontier = next.and_not(seen);
    seen |= frontier;
  }
  return seen == g.vertices();
}

int min_degree(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("min degree of an empty graph");
  int d = g.n();
  for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.push_back({u + a.n(), v + a.n()});
  return Graph(a.n() + b.n(), edges);
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "random") return Family::random;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::random: return "random";
  }
  return "?";
}

static long long parse_ll_strict(std::string_view s, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument(std::string("bad integer in ") + what + ": '" +
                                std::string(s) + "'");
  return v;
}

Density Density::parse(std::string_view text) {
  Density d;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    d.num = parse_ll_strict(text, "density");
    d.den = 1;
  } else {
    d.num = parse_ll_strict(text.substr(0, slash), "density");
    d.den = parse_ll_strict(text.substr(slash + 1), "density");
  }
  if (d.den <= 0 || d.num < 0 || d.num > d.den)
    throw std::invalid_argument("density must lie in [0,1]: got " + std::string(text));
  long long g = std::gcd(d.num, d.den);
  if (g > 1) {
    d.num /= g;
    d.den /= g;
  }
  return d;
}

std::string Density::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("star requires n >= 1");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph make_random(int n, std::uint64_t seed, Density density) {
  if (n < 1) throw std::invalid_argument("random requires n >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      // exact Bernoulli(num/den): one bounded draw per pair, in pair order
      if (density.num > 0 &&
          rng.below(static_cast<std::uint64_t>(density.den)) <
              static_cast<std::uint64_t>(density.num))
        edges.push_back({u, v});
    }
  return Graph(n, edges);
}

Graph generate_family(Family kind, int n, std::optional<std::uint64_t> seed,
                      std::optional<Density> density) {
  switch (kind) {
    case Family::path: return make_path(n);
    case Family::cycle: return make_cycle(n);
    case Family::complete: return make_complete(n);
    case Family::star: return make_star(n);
    case Family::random:
      if (!seed || !density)
        throw std::invalid_argument("random family requires a seed and a density");
      return make_random(n, *seed, *density);
  }
  throw std::invalid_argument("unknown family");
}

Graph read_edge_list(std::istream& in, bool one_indexed) {
  int lineno = 0;
  std::string line;
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("edge list, line " + std::to_string(lineno) + ": " + msg);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw std::invalid_argument("edge list: no header line");
  std::istringstream header(line);
  long long n = 0, m = 0;
  std::string extra;
  if (!(header >> n >> m)) fail("expected header 'n m'");
  if (header >> extra) fail("trailing tokens after header");
  if (n < 0 || n > VertexSet::max_vertices) fail("vertex count out of range");
  if (m < 0) fail("negative edge count");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line())
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, found " + std::to_string(i));
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> u >> v)) fail("expected edge 'u v'");
    if (es >> extra) fail("trailing tokens after edge");
    if (one_indexed) {
      --u;
      --v;
    }
    if (u >= v) fail("edges must satisfy u < v");
    if (u < 0 || v >= n) fail("edge endpoint out of range");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (next_line()) fail("unexpected content after the last edge");

  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("edge list: ") + e.what());
  }
}

Graph load_edge_list(const std::string& path, bool one_indexed) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_edge_list(in, one_indexed);
}

void write_edge_list(std::ostream& out, const Graph& g, bool one_indexed) {
  const int base = one_indexed ? 1 : 0;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u + base << ' ' << v + base << '\n';
}

}  // namespace prismdom
