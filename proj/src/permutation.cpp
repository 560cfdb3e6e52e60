#include "prismdom/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "prismdom/errors.hpp"
#include "prismdom/rng.hpp"
#include "prismdom/vertex_set.hpp"

namespace prismdom {

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return from_image(std::move(image));
}

Permutation Permutation::from_image(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  std::vector<int> inverse(image.size(), -1);
  for (int v = 0; v < n; ++v) {
    int w = image[static_cast<std::size_t>(v)];
    if (w < 0 || w >= n)
      throw std::invalid_argument("permutation image out of range: " + std::to_string(w));
    if (inverse[static_cast<std::size_t>(w)] != -1)
      throw std::invalid_argument("permutation repeats image " + std::to_string(w));
    inverse[static_cast<std::size_t>(w)] = v;
  }
  Permutation p;
  p.image_ = std::move(image);
  p.inverse_ = std::move(inverse);
  return p;
}

bool Permutation::is_identity() const {
  for (int v = 0; v < n(); ++v)
    if (image_[static_cast<std::size_t>(v)] != v) return false;
  return true;
}

std::string Permutation::image_line(int index_base) const {
  std::string out;
  for (int v = 0; v < n(); ++v) {
    if (v) out += ' ';
    out += std::to_string(image_[static_cast<std::size_t>(v)] + index_base);
  }
  return out;
}

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (in >> token) {
    int v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || p != token.data() + token.size())
      throw std::invalid_argument("bad integer in permutation: '" + token + "'");
    out.push_back(v);
  }
  return out;
}

Permutation parse_cycles(std::string_view text, int n, int shift) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  VertexSet used;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("cycle notation: expected '(' near '" +
                                  std::string(text.substr(i)) + "'");
    ++i;
    auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw std::invalid_argument("cycle notation: missing ')'");
    std::string body(text.substr(i, close - i));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::vector<int> cycle = parse_ints(body);
    if (cycle.empty()) throw std::invalid_argument("cycle notation: empty cycle");
    for (int& v : cycle) {
      v -= shift;
      if (v < 0 || v >= n)
        throw std::invalid_argument("cycle notation: label out of range: " +
                                    std::to_string(v + shift));
      if (used.test(v))
        throw std::invalid_argument("cycle notation: label repeated: " +
                                    std::to_string(v + shift));
      used.set(v);
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      image[static_cast<std::size_t>(cycle[j])] = cycle[(j + 1) % cycle.size()];
    i = close + 1;
    skip_ws();
  }
  return Permutation::from_image(std::move(image));
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n, bool one_indexed) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw std::invalid_argument("empty permutation spec");
  text = text.substr(first, last - first + 1);

  if (text == "identity" || text == "1") return Permutation::identity(n);
  if (text.find('(') != std::string_view::npos)
    return parse_cycles(text, n, one_indexed ? 1 : 0);

  std::vector<int> image = parse_ints(text);
  if (static_cast<int>(image.size()) != n)
    throw std::invalid_argument("permutation has " + std::to_string(image.size()) +
                                " entries, expected " + std::to_string(n));
  if (one_indexed)
    for (int& v : image) --v;
  return Permutation::from_image(std::move(image));
}

std::vector<Permutation> enumerate_permutations(int n, int cap) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  constexpr int kHardCeiling = 10;
  if (n > cap || n > kHardCeiling)
    throw CapExceeded("exhaustive enumeration of " + std::to_string(n) +
                      "! permutations exceeds the cap (" +
                      std::to_string(std::min(cap, kHardCeiling)) +
                      "); use sampling (--sample) instead");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_image(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<Permutation> sample_permutations(int n, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(count));
  out.push_back(Permutation::identity(n));
  SplitMix64 rng(seed);
  for (int s = 1; s < count; ++s) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]);
    }
    out.push_back(Permutation::from_image(std::move(image)));
  }
  return out;
}

}  // namespace prismdom
