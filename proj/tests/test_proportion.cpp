#include <doctest.h>

#include <stdexcept>

#include "prismdom/proportion.hpp"

using namespace prismdom;

TEST_CASE("proportions reduce and print") {
  CHECK(Proportion(2, 4).num() == 1);
  CHECK(Proportion(2, 4).den() == 2);
  CHECK(Proportion(6, 10).str() == "3/5");
  CHECK(Proportion(5, 5).str() == "1");
}

TEST_CASE("proportions reject values outside (0,1]") {
  CHECK_THROWS_AS(Proportion(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Proportion(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(Proportion(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(Proportion(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Proportion(1, -2), std::invalid_argument);
}

TEST_CASE("parsing accepts a/b and bare 1") {
  CHECK(Proportion::parse("3/4") == Proportion(3, 4));
  CHECK(Proportion::parse("1") == Proportion(1, 1));
  CHECK(Proportion::parse("10/20") == Proportion(1, 2));
  CHECK_THROWS_AS(Proportion::parse("2"), std::invalid_argument);
  CHECK_THROWS_AS(Proportion::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Proportion::parse("3/"), std::invalid_argument);
}

TEST_CASE("comparisons cross-multiply exactly") {
  // (n+1)/(2n) boundaries for n = 4: 5/8
  CHECK(Proportion(5, 8) < Proportion(2, 3));
  CHECK(Proportion(5, 8) <= Proportion(5, 8));
  CHECK_FALSE(Proportion(2, 3) < Proportion(5, 8));
  CHECK(Proportion(1, 3) < Proportion(1, 2));
}

TEST_CASE("met_by implements den*covered >= num*total") {
  // covering 10 of 15 vertices meets p = 2/3 exactly
  CHECK(Proportion(2, 3).met_by(10, 15));
  CHECK_FALSE(Proportion(2, 3).met_by(9, 15));
  CHECK(Proportion(1, 1).met_by(6, 6));
  CHECK_FALSE(Proportion(1, 1).met_by(5, 6));
}

TEST_CASE("min_coverage is the exact ceiling") {
  CHECK(Proportion(1, 2).min_coverage(6) == 3);
  CHECK(Proportion(1, 2).min_coverage(7) == 4);
  CHECK(Proportion(5, 8).min_coverage(8) == 5);
  CHECK(Proportion(1, 1).min_coverage(9) == 9);
  CHECK(Proportion(1, 100).min_coverage(5) == 1);
}
