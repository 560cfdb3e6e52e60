#include "prismdom/proportion.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace prismdom {

Proportion::Proportion(long long num, long long den) : num_(num), den_(den) {
  if (den_ <= 0 || num_ <= 0 || num_ > den_)
    throw std::invalid_argument("proportion must lie in (0,1]: got " +
                                std::to_string(num) + "/" + std::to_string(den));
  long long g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

int Proportion::min_coverage(int total) const {
  return static_cast<int>((num_ * total + den_ - 1) / den_);
}

bool Proportion::met_by(int covered, int total) const {
  return den_ * static_cast<long long>(covered) >= num_ * static_cast<long long>(total);
}

static long long parse_ll(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad integer in proportion: '" + std::string(s) + "'");
  return v;
}

Proportion Proportion::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Proportion(parse_ll(text), 1);
  return Proportion(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

std::string Proportion::str() const {
  if (num_ == den_) return "1";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace prismdom
