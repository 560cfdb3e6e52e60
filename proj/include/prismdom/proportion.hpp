#pragma once

#include <string>
#include <string_view>

namespace prismdom {

// Exact rational in (0,1]. All comparisons cross-multiply in integers;
// nothing here ever converts to floating point, so boundary values like
// (n+1)/(2n) compare exactly.
class Proportion {
 public:
  Proportion(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  // smallest count c with c/total >= this proportion
  int min_coverage(int total) const;

  // den*covered >= num*total
  bool met_by(int covered, int total) const;

  // "a/b"; a bare "1" is accepted for p = 1
  static Proportion parse(std::string_view text);
  std::string str() const;

  friend bool operator==(Proportion a, Proportion b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(Proportion a, Proportion b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(Proportion a, Proportion b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }

 private:
  long long num_;
  long long den_;
};

}  // namespace prismdom
