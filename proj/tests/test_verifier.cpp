#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "prismdom/rng.hpp"
#include "prismdom/verifier.hpp"

using namespace prismdom;

TEST_CASE("prop1 holds for gamma=1 graphs and rejects the rest") {
  auto star = verify_prop1(make_star(4), SweepMode::exhaustive());
  CHECK(star.verdict == Verdict::holds);

  auto complete = verify_prop1(make_complete(5), SweepMode::exhaustive());
  CHECK(complete.verdict == Verdict::holds);

  CHECK(verify_prop1(make_path(4), SweepMode::exhaustive()).verdict ==
        Verdict::preconditions_unmet);
  CHECK(verify_prop1(Graph(3, {{0, 1}}), SweepMode::exhaustive()).verdict ==
        Verdict::preconditions_unmet);
  CHECK(verify_prop1(make_complete(1), SweepMode::exhaustive()).verdict ==
        Verdict::preconditions_unmet);
}

TEST_CASE("prop2 bound at the boundary proportion") {
  CHECK(verify_prop2(make_path(6), Permutation::identity(6)).verdict ==
        Verdict::holds);
  for (const auto& pi : enumerate_permutations(3))
    CHECK(verify_prop2(make_complete(3), pi).verdict == Verdict::holds);

  Graph g = make_random(8, 1, Density{1, 2});
  for (const auto& pi : sample_permutations(8, 20, 3))
    CHECK(verify_prop2(g, pi).verdict == Verdict::holds);
}

TEST_CASE("prop3 equality for paths and cycles") {
  CHECK(verify_prop3(Family::path, 6, SweepMode::exhaustive()).verdict ==
        Verdict::holds);
  CHECK(verify_prop3(Family::cycle, 5, SweepMode::exhaustive()).verdict ==
        Verdict::holds);
  CHECK(verify_prop3(Family::path, 2, SweepMode::exhaustive()).verdict ==
        Verdict::holds);
  CHECK_THROWS_AS(verify_prop3(Family::complete, 4, SweepMode::exhaustive()),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_prop3(Family::cycle, 2, SweepMode::exhaustive()),
                  std::invalid_argument);
}

TEST_CASE("remark biconditional") {
  for (const auto& pi : enumerate_permutations(4))
    CHECK(verify_remark(make_complete(4), pi).verdict == Verdict::holds);
  for (const auto& pi : sample_permutations(6, 10, 5))
    CHECK(verify_remark(make_path(6), pi).verdict == Verdict::holds);
  auto k1 = verify_remark(make_complete(1), Permutation::identity(1));
  CHECK(k1.verdict == Verdict::holds);
  CHECK(k1.threshold_value == 1);
}

TEST_CASE("prop4 biconditional on specific instances") {
  // gamma = 2: sufficiency branch fires, value must be 2
  Graph p4 = make_path(4);
  for (const auto& pi : enumerate_permutations(4)) {
    auto rep = verify_prop4(p4, pi);
    CHECK(rep.verdict == Verdict::holds);
    CHECK(rep.threshold_value == 2);
    CHECK(rep.fixed_argmax->condition);
    CHECK(rep.existential_argmax->condition);
  }

  // gamma = 1: both sides false
  for (const auto& pi : enumerate_permutations(4)) {
    auto rep = verify_prop4(make_complete(4), pi);
    CHECK(rep.verdict == Verdict::holds);
    CHECK_FALSE(rep.fixed_argmax->condition);
    CHECK(rep.threshold_value != 2);
  }

  // gamma = 3 on the 9-cycle under the identity: overlap 2, condition false
  auto rep = verify_prop4(make_cycle(9), Permutation::identity(9));
  CHECK(rep.verdict == Verdict::holds);
  CHECK(rep.fixed_argmax->overlap == 2);
  CHECK_FALSE(rep.fixed_argmax->condition);
  CHECK_FALSE(rep.existential_argmax->condition);
  CHECK(rep.threshold_value != 2);
}

TEST_CASE("prop4 sufficiency never fails on a seeded batch") {
  SplitMix64 rng(301);
  int seen = 0;
  while (seen < 60) {
    int n = 2 + static_cast<int>(rng.below(5));
    Graph g = make_random(n, rng.next(), Density{1, 2});
    if (!is_connected(g)) continue;
    ++seen;
    for (const auto& pi : sample_permutations(n, 6, rng.next())) {
      auto rep = verify_prop4(g, pi);
      CHECK_FALSE(rep.fixed_argmax->sufficiency_violated);
      CHECK_FALSE(rep.existential_argmax->sufficiency_violated);
      if (rep.verdict == Verdict::counterexample) {
        REQUIRE(rep.certificate.has_value());
        CHECK(reverify(*rep.certificate));
      }
    }
  }
}

TEST_CASE("prop5 sandwich on breakpoint grids") {
  CHECK(verify_prop5(make_complete(1), Permutation::identity(1)).verdict ==
        Verdict::holds);
  SplitMix64 rng(55);
  for (int round = 0; round < 12; ++round) {
    int n = 1 + static_cast<int>(rng.below(7));
    Graph g = make_random(n, rng.next(), Density{1, 2});
    for (const auto& pi : sample_permutations(n, 6, rng.next()))
      CHECK(verify_prop5(g, pi).verdict == Verdict::holds);
  }
  // custom grid
  Graph g = make_random(7, 3, Density{1, 2});
  std::vector<Proportion> grid{Proportion(1, 7), Proportion(1, 2), Proportion(1, 1)};
  for (const auto& pi : sample_permutations(7, 30, 9))
    CHECK(verify_prop5(g, pi, grid).verdict == Verdict::holds);
}

TEST_CASE("gu bound at p=1") {
  SplitMix64 rng(68);
  for (int round = 0; round < 15; ++round) {
    int n = 1 + static_cast<int>(rng.below(7));
    Graph g = make_random(n, rng.next(), Density{2, 3});
    for (const auto& pi : sample_permutations(n, 4, rng.next()))
      CHECK(verify_gu_bound(g, pi).verdict == Verdict::holds);
  }
}

TEST_CASE("prop6 preconditions") {
  CHECK(check_prop6_preconditions(instances::two_star4(), VertexSet::of({0, 4})));
  CHECK(check_prop6_preconditions(make_cycle(6), VertexSet::of({0, 3})));
  CHECK_FALSE(check_prop6_preconditions(make_cycle(6), VertexSet::of({0, 2})));
  CHECK_FALSE(check_prop6_preconditions(make_star(4), VertexSet::of({0, 1})));
  CHECK_THROWS_AS(check_prop6_preconditions(make_cycle(6), VertexSet{}),
                  std::invalid_argument);
}

TEST_CASE("prop6 interval claim") {
  auto stars = verify_prop6(instances::two_star4(), VertexSet::of({0, 4}),
                            SweepMode::sampled(25, 6));
  CHECK(stars.verdict == Verdict::holds);
  auto cyc = verify_prop6(make_cycle(6), VertexSet::of({0, 3}),
                          SweepMode::sampled(25, 6));
  CHECK(cyc.verdict == Verdict::holds);
  auto unmet = verify_prop6(make_cycle(6), VertexSet::of({0, 2}),
                            SweepMode::exhaustive());
  CHECK(unmet.verdict == Verdict::preconditions_unmet);
}

TEST_CASE("prop7 pairing construction") {
  auto ok = check_prop7_preconditions(instances::gadget(), VertexSet::of({0, 1}));
  REQUIRE(ok.pairing.has_value());
  CHECK(ok.pairing->pairs == std::vector<std::pair<int, int>>{{0, 1}});

  // star centers share no neighbor at all: no partner
  auto centers = check_prop7_preconditions(instances::two_star4(),
                                           VertexSet::of({0, 4}));
  CHECK_FALSE(centers.pairing.has_value());
  CHECK(centers.error == "a member has no partner");

  auto two = check_prop7_preconditions(instances::two_gadget(),
                                       VertexSet::of({0, 1, 5, 6}));
  REQUIRE(two.pairing.has_value());
  CHECK(two.pairing->pairs == std::vector<std::pair<int, int>>{{0, 1}, {5, 6}});

  // adjacent members are ill-formed
  auto bad = check_prop7_preconditions(make_cycle(4), VertexSet::of({0, 1}));
  CHECK_FALSE(bad.pairing.has_value());
}

TEST_CASE("packing case classification") {
  auto pairing = *check_prop7_preconditions(instances::gadget(),
                                            VertexSet::of({0, 1}))
                      .pairing;
  CHECK(classify_packing_case(pairing, Permutation::identity(5)) ==
        PackingCase::identity);
  CHECK(classify_packing_case(pairing, parse_permutation("(0 1)", 5)) ==
        PackingCase::pair_swap);
  // identity on M, nontrivial elsewhere
  CHECK(classify_packing_case(pairing, parse_permutation("(2 3)", 5)) ==
        PackingCase::mapped_into_set);
  // image leaves M
  CHECK_FALSE(classify_packing_case(pairing, parse_permutation("(0 2)", 5))
                  .has_value());
}

TEST_CASE("find_two_packing on the gadget") {
  Graph g = instances::gadget();
  auto pairing = *check_prop7_preconditions(g, VertexSet::of({0, 1})).pairing;

  VertexSet t_id = find_two_packing(g, pairing, Permutation::identity(5));
  CHECK(t_id == VertexSet::of({0, 5 + 1}));
  auto audit = audit_two_packing(build_prism(g, Permutation::identity(5)), t_id, 2);
  CHECK(audit.ok);

  Permutation swap = parse_permutation("(0 1)", 5);
  VertexSet t_swap = find_two_packing(g, pairing, swap);
  CHECK(t_swap == VertexSet::of({0, 5 + 0}));
  CHECK(audit_two_packing(build_prism(g, swap), t_swap, 2).ok);

  CHECK_THROWS_AS(find_two_packing(g, pairing, parse_permutation("(0 2)", 5)),
                  std::invalid_argument);
}

TEST_CASE("find_two_packing on two gadgets, audited by brute force") {
  Graph g = instances::two_gadget();
  VertexSet m = VertexSet::of({0, 1, 5, 6});
  auto pairing = *check_prop7_preconditions(g, m).pairing;
  const int dmax = max_degree(g).degree;

  int case_iii_runs = 0;
  std::vector<Permutation> perms;
  perms.push_back(Permutation::identity(10));
  perms.push_back(parse_permutation("(0 1)(5 6)", 10));
  // permutations of M = {0,1,5,6} within M, identity off M
  const int mv[4] = {0, 1, 5, 6};
  int order[4] = {0, 1, 2, 3};
  do {
    std::vector<int> image(10);
    for (int i = 0; i < 10; ++i) image[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < 4; ++i)
      image[static_cast<std::size_t>(mv[i])] = mv[order[i]];
    perms.push_back(Permutation::from_image(image));
  } while (std::next_permutation(order, order + 4));

  for (const auto& pi : perms) {
    auto packing_case = classify_packing_case(pairing, pi);
    REQUIRE(packing_case.has_value());
    if (*packing_case == PackingCase::mapped_into_set) ++case_iii_runs;
    VertexSet t = find_two_packing(g, pairing, pi);
    PrismGraph pr = build_prism(g, pi);
    CHECK(audit_two_packing(pr, t, 4).ok);

    // every subset of T of size i covers exactly i*(dmax+2) prism vertices
    auto members = t.to_vector();
    for (std::uint64_t mask = 0; mask < (1u << 4); ++mask) {
      VertexSet subset;
      for (int b = 0; b < 4; ++b)
        if (mask & (1u << b)) subset.set(members[static_cast<std::size_t>(b)]);
      CHECK(coverage(pr.combined, subset) == subset.count() * (dmax + 2));
    }
  }
  CHECK(case_iii_runs >= 20);
}

TEST_CASE("packing walk survives every mapping of a three-pair set") {
  Graph g = disjoint_union(instances::two_gadget(), instances::gadget());
  VertexSet m = VertexSet::of({0, 1, 5, 6, 10, 11});
  auto pairing = check_prop7_preconditions(g, m).pairing;
  REQUIRE(pairing.has_value());
  const int dmax = max_degree(g).degree;

  // every permutation of M inside M, identity elsewhere: 720 walks, each
  // audited straight off the prism adjacency
  const int mv[6] = {0, 1, 5, 6, 10, 11};
  int order[6] = {0, 1, 2, 3, 4, 5};
  int runs = 0;
  do {
    std::vector<int> image(15);
    for (int i = 0; i < 15; ++i) image[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < 6; ++i)
      image[static_cast<std::size_t>(mv[i])] = mv[order[i]];
    Permutation pi = Permutation::from_image(image);
    REQUIRE(classify_packing_case(*pairing, pi).has_value());
    VertexSet t = find_two_packing(g, *pairing, pi);
    PrismGraph pr = build_prism(g, pi);
    PackingAudit audit = audit_two_packing(pr, t, 6);
    CHECK(audit.ok);
    CHECK(coverage(pr.combined, t) == 6 * (dmax + 2));
    ++runs;
  } while (std::next_permutation(order, order + 6));
  CHECK(runs == 720);
}

TEST_CASE("verify_prop7 across the three cases") {
  Graph g = instances::gadget();
  VertexSet m = VertexSet::of({0, 1});
  CHECK(verify_prop7(g, m, Permutation::identity(5)).verdict == Verdict::holds);
  CHECK(verify_prop7(g, m, parse_permutation("(0 1)", 5)).verdict == Verdict::holds);
  CHECK(verify_prop7(g, m, parse_permutation("(2 3 4)", 5)).verdict ==
        Verdict::holds);
  CHECK(verify_prop7(g, m, parse_permutation("(0 2)", 5)).verdict ==
        Verdict::preconditions_unmet);
  CHECK(verify_prop7(make_cycle(6), VertexSet::of({0, 3}),
                     Permutation::identity(6))
            .verdict == Verdict::preconditions_unmet);
}

TEST_CASE("certificates reverify and detect tampering") {
  Certificate cert;
  cert.graph = make_path(4);
  cert.quantity = Certificate::Quantity::base_gamma;
  cert.relation = Certificate::Relation::eq;
  cert.bound = 3;  // wrong claim: gamma(P4) is 2
  cert.value = 2;
  CHECK(reverify(cert));

  cert.value = 5;  // recorded value no longer matches a fresh run
  CHECK_FALSE(reverify(cert));

  cert.value = 2;
  cert.bound = 2;  // claim actually holds: nothing to reproduce
  CHECK_FALSE(reverify(cert));

  Certificate prism_cert;
  prism_cert.graph = make_cycle(6);
  prism_cert.pi = parse_permutation("(0 1)", 6);
  prism_cert.p = Proportion(1, 2);
  prism_cert.quantity = Certificate::Quantity::prism_gamma_p;
  prism_cert.relation = Certificate::Relation::ge;
  prism_cert.bound = 99;  // impossible bound; any value violates it
  prism_cert.value = partial_domination_number(
      build_prism(make_cycle(6), *prism_cert.pi).combined, *prism_cert.p);
  CHECK(reverify(prism_cert));
}

TEST_CASE("named instances") {
  CHECK(instances::gadget().n() == 5);
  CHECK(instances::gadget().m() == 4);
  CHECK(instances::two_gadget().n() == 10);
  CHECK(instances::two_star4().n() == 8);
  CHECK(instances::by_name("gadget").has_value());
  CHECK_FALSE(instances::by_name("nope").has_value());
}
