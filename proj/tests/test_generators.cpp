#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "obnox/generators.hpp"
#include "obnox/oracle.hpp"

using namespace obnox;

TEST_CASE("splitmix64 reference stream") {
  // First outputs for seed 0 of the standard splitmix64 sequence.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("hitting reduction: distance quantization") {
  SetSystem sys;
  sys.universe_size = 3;
  sys.sets = {{0, 1}, {2}};
  sys.k = 2;
  sys.multiplicity = 1;
  const auto [inst, gt] = gen_hitting_set(sys);
  for (int v = 0; v < inst.num_voters(); ++v)
    for (int c = 0; c < inst.num_candidates(); ++c)
      CHECK((inst.dist(v, c) == 1.0 || inst.dist(v, c) == 3.0));
  for (int a = 0; a < inst.num_candidates(); ++a)
    for (int b = a + 1; b < inst.num_candidates(); ++b)
      CHECK(inst.dist_cc(a, b) == 2.0);
  CHECK(gt.answer);  // {0 or 1, 2} hits both sets
  CHECK(gt.threshold_t == 3.0);
}

TEST_CASE("hitting oracle: singleton set forces its element") {
  SetSystem sys;
  sys.universe_size = 4;
  sys.sets = {{2}, {0, 1, 2}};
  sys.k = 1;
  sys.multiplicity = 1;
  const GroundTruth gt = hitting_oracle(sys);
  REQUIRE(gt.answer);
  REQUIRE(gt.witness.has_value());
  CHECK(std::find(gt.witness->begin(), gt.witness->end(), 2) !=
        gt.witness->end());
}

TEST_CASE("hitting oracle: multiplicity above max set size is a no") {
  SetSystem sys;
  sys.universe_size = 4;
  sys.sets = {{0}, {1, 2}};
  sys.k = 3;
  sys.multiplicity = 2;
  CHECK_FALSE(hitting_oracle(sys).answer);
}

TEST_CASE("hitting reduction equivalence, lambda 1 and 2") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SplitMix64 rng(seed * 7);
    const int universe = 2 + static_cast<int>(rng.next_below(3));
    const int nsets = 1 + static_cast<int>(rng.next_below(4));
    const int k = 1 + static_cast<int>(rng.next_below(
                          static_cast<std::uint64_t>(universe)));
    const int mult = 1 + static_cast<int>(rng.next_below(2));
    const SetSystem sys =
        gen_random_set_system(universe, nsets, k, std::min(mult, k), seed);
    const auto [inst, gt] = gen_hitting_set(sys);
    const bool feasible = oracle_decide(inst, 3.0).has_value();
    CHECK(feasible == gt.answer);
  }
}

TEST_CASE("set generator rejects a set equal to the universe") {
  SetSystem sys;
  sys.universe_size = 2;
  sys.sets = {{0, 1}};
  sys.k = 1;
  sys.multiplicity = 1;
  CHECK_THROWS_AS(gen_hitting_set(sys), ValidationError);
}

TEST_CASE("udg reduction: three collinear points") {
  const std::vector<std::pair<double, double>> pts = {
      {0.0, 0.0}, {5.0, 0.0}, {10.0, 0.0}};
  const auto [inst, gt] = gen_udg(pts, 2);
  CHECK(gt.threshold_t == 5.0);
  CHECK(inst.lambda() == 1);  // k - 1
  CHECK(gt.answer);           // graph is edgeless, any pair works
  CHECK(oracle_decide(inst, 5.0).has_value());
}

TEST_CASE("udg reduction: path plus a far vertex") {
  // The path endpoints are at hop distance 2 (adjacency is distance <= 2),
  // so a 2-independent set of size 2 must use the far vertex.
  const std::vector<std::pair<double, double>> pts = {
      {0.0, 0.0}, {2.0, 0.0}, {4.0, 0.0}, {0.0, 9.0}};
  const auto [inst, gt] = gen_udg(pts, 2);
  REQUIRE(gt.answer);
  REQUIRE(gt.witness.has_value());
  CHECK(std::find(gt.witness->begin(), gt.witness->end(), 3) !=
        gt.witness->end());
  CHECK(oracle_decide(inst, gt.threshold_t).has_value());
}

TEST_CASE("udg reduction equivalence on random point sets") {
  int tested = 0;
  for (std::uint64_t seed = 1; tested < 30; ++seed) {
    SplitMix64 rng(seed * 11);
    const int n = 4 + static_cast<int>(rng.next_below(5));
    const int k = 2 + static_cast<int>(rng.next_below(2));
    const auto pts = gen_random_points(n, 4.0, seed);
    try {
      const auto [inst, gt] = gen_udg(pts, k);
      CHECK(oracle_decide(inst, gt.threshold_t).has_value() == gt.answer);
      ++tested;
    } catch (const ValidationError&) {
      // all points pairwise within 2: a trivial no-instance, resample
    }
  }
}

TEST_CASE("udg generator rejects trivially infeasible point sets") {
  const std::vector<std::pair<double, double>> pts = {
      {0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_WITH_AS(gen_udg(pts, 2), doctest::Contains("trivial no"),
                       ValidationError);
}

TEST_CASE("seeded euclidean generation is bit-reproducible") {
  const Instance a = gen_random_euclidean(5, 6, 3, 2, 1, 123);
  const Instance b = gen_random_euclidean(5, 6, 3, 2, 1, 123);
  CHECK(a.space().coords() == b.space().coords());
  const Instance c = gen_random_euclidean(5, 6, 3, 2, 1, 124);
  CHECK(a.space().coords() != c.space().coords());
}

TEST_CASE("random set systems are proper non-empty subsets") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SetSystem sys = gen_random_set_system(5, 4, 2, 1, seed);
    for (const auto& s : sys.sets) {
      CHECK(!s.empty());
      CHECK(s.size() < 5);
    }
  }
}

TEST_CASE("oracle caps are enforced") {
  SetSystem sys;
  sys.universe_size = 25;
  sys.sets = {{0}};
  sys.k = 2;
  sys.multiplicity = 1;
  CHECK_THROWS_AS(hitting_oracle(sys, 20), CapExceeded);
  std::vector<std::pair<double, double>> many(20, {0.0, 0.0});
  CHECK_THROWS_AS(two_is_oracle(many, 2, 15), CapExceeded);
}
