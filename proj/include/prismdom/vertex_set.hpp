#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace prismdom {

// Subset of vertices 0..63 packed into one 64-bit word. Wide enough for a
// 32-vertex base graph and its prism.
struct VertexSet {
  std::uint64_t bits = 0;

  static constexpr int max_vertices = 64;

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.set(v);
    return s;
  }

  // {0, 1, ..., n-1}
  static VertexSet first_n(int n) {
    return VertexSet{n >= 64 ? ~0ull : ((1ull << n) - 1)};
  }

  bool test(int v) const { return (bits >> v) & 1u; }
  void set(int v) { bits |= 1ull << v; }
  void reset(int v) { bits &= ~(1ull << v); }

  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(VertexSet other) const { return (other.bits & ~bits) == 0; }
  bool intersects(VertexSet other) const { return (bits & other.bits) != 0; }

  VertexSet operator|(VertexSet o) const { return VertexSet{bits | o.bits}; }
  VertexSet operator&(VertexSet o) const { return VertexSet{bits & o.bits}; }
  VertexSet and_not(VertexSet o) const { return VertexSet{bits & ~o.bits}; }
  VertexSet& operator|=(VertexSet o) {
    bits |= o.bits;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits &= o.bits;
    return *this;
  }

  bool operator==(const VertexSet&) const = default;

  // index of the smallest member; 64 when empty
  int lowest() const { return std::countr_zero(bits); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }
};

// "{0, 3, 5}"; index_base shifts printed labels (1 for one-indexed output)
std::string to_string(VertexSet s, int index_base = 0);

}  // namespace prismdom
