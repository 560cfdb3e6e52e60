#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace prismdom {

// Bijection on 0..n-1 with a precomputed inverse.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  static Permutation from_image(std::vector<int> image);

  int n() const { return static_cast<int>(image_.size()); }
  int apply(int v) const { return image_[static_cast<std::size_t>(v)]; }
  int invert(int v) const { return inverse_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

  // "image[0] image[1] ..." with labels shifted by index_base
  std::string image_line(int index_base = 0) const;

 private:
  std::vector<int> image_;
  std::vector<int> inverse_;
};

// Accepts "identity", a one-line image such as "1 0 2", or cycle notation
// such as "(2 3 4)" or "(0 1)(2 3)". `one_indexed` shifts labels on input.
Permutation parse_permutation(std::string_view text, int n, bool one_indexed = false);

inline constexpr int kDefaultExhaustiveCap = 8;

// All n! permutations, in lexicographic order of the image array. Refuses
// n above `cap` (and above 10 unconditionally; 10! already needs ~4 GB of
// downstream work). Use sample_permutations beyond that.
std::vector<Permutation> enumerate_permutations(int n, int cap = kDefaultExhaustiveCap);

// `count` permutations: the identity first, then Fisher-Yates shuffles driven
// by one SplitMix64 stream. Reproducible from the seed.
std::vector<Permutation> sample_permutations(int n, int count, std::uint64_t seed);

}  // namespace prismdom
