#include <doctest.h>

#include "prismdom/prism.hpp"
#include "prismdom/solver.hpp"
#include "prismdom/sweep.hpp"

using namespace prismdom;

TEST_CASE("complete graph fixes below the threshold and doubles above") {
  Graph k4 = make_complete(4);
  SweepResult below = sweep(k4, Proportion(5, 8), SweepMode::exhaustive());
  CHECK(below.min_value == 1);
  CHECK(below.max_value == 1);
  CHECK(below.histogram.at(1) == 24);
  CHECK(below.base_value == 1);
  CHECK(classify(below) == Classification::fixer);

  SweepResult above = sweep(k4, Proportion(1, 1), SweepMode::exhaustive());
  CHECK(above.min_value == 2);
  CHECK(above.max_value == 2);
  CHECK(classify(above) == Classification::doubler);
}

TEST_CASE("single-edge graph at p=1, cross-checked by the oracle") {
  Graph p2 = make_path(2);
  SweepResult r = sweep(p2, Proportion(1, 1), SweepMode::exhaustive());
  CHECK(r.histogram.size() == 1);
  long long total = 0;
  for (auto [value, count] : r.histogram) total += count;
  CHECK(total == 2);
  for (const auto& pi : enumerate_permutations(2)) {
    Graph prism = build_prism(p2, pi).combined;
    CHECK(partial_domination_oracle(prism, Proportion(1, 1)) == r.min_value);
  }
  CHECK(r.min_value == r.max_value);
}

TEST_CASE("tiny proportions make the star a fixer") {
  CHECK(classify(make_star(4), Proportion(1, 8), SweepMode::exhaustive()) ==
        Classification::fixer);
}

TEST_CASE("histogram totals and the doubling sandwich") {
  Graph g = make_random(5, 9, Density{1, 2});
  SweepResult r = sweep(g, Proportion(2, 3), SweepMode::exhaustive());
  long long total = 0;
  for (auto [value, count] : r.histogram) total += count;
  CHECK(total == 120);
  CHECK(r.min_value <= r.max_value);
  CHECK(r.base_value <= r.min_value);
  CHECK(r.max_value <= 2 * r.base_value);

  SweepResult s = sweep(g, Proportion(2, 3), SweepMode::sampled(37, 4));
  total = 0;
  for (auto [value, count] : s.histogram) total += count;
  CHECK(total == 37);
  CHECK(s.base_value <= s.min_value);
  CHECK(s.max_value <= 2 * s.base_value);
}

TEST_CASE("witness permutations attain their extremes") {
  Graph g = make_random(6, 15, Density{1, 3});
  SweepResult r = sweep(g, Proportion(3, 4), SweepMode::exhaustive());
  CHECK(partial_domination_number(build_prism(g, r.witness_min).combined,
                                  Proportion(3, 4)) == r.min_value);
  CHECK(partial_domination_number(build_prism(g, r.witness_max).combined,
                                  Proportion(3, 4)) == r.max_value);
}

TEST_CASE("job count does not change the result") {
  Graph g = make_random(6, 23, Density{1, 2});
  SweepResult one = sweep(g, Proportion(1, 2), SweepMode::exhaustive(), 8, 1);
  SweepResult four = sweep(g, Proportion(1, 2), SweepMode::exhaustive(), 8, 4);
  CHECK(one.histogram == four.histogram);
  CHECK(one.min_value == four.min_value);
  CHECK(one.max_value == four.max_value);
  CHECK(one.witness_min == four.witness_min);
  CHECK(one.witness_max == four.witness_max);
}

TEST_CASE("sampled sweeps reproduce from the seed") {
  Graph g = make_random(7, 2, Density{1, 2});
  SweepResult a = sweep(g, Proportion(1, 2), SweepMode::sampled(50, 11));
  SweepResult b = sweep(g, Proportion(1, 2), SweepMode::sampled(50, 11));
  CHECK(a.histogram == b.histogram);
  CHECK(a.witness_min == b.witness_min);
}
