#ifndef OBNOX_GENERATORS_HPP
#define OBNOX_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obnox/instance.hpp"
#include "obnox/types.hpp"

namespace obnox {

/// Deterministic 64-bit generator used for all instance sampling, so the
/// corpus is bit-reproducible across platforms. Constants are the widely
/// used splitmix64 ones (Steele, Lea, Flood 2014):
///   state += 0x9e3779b97f4a7c15
///   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb; return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1) with 53 bits of mantissa.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

struct SetSystem {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;  // elements in [0, universe_size)
  int k = 0;
  int multiplicity = 1;  // lambda for multi-hitting
};

struct GroundTruth {
  bool answer = false;
  std::optional<std::vector<int>> witness;
  double threshold_t = 0.0;
  std::string note;
};

/// Brute-force (multi-)hitting-set search: a k-subset H of the universe with
/// |H ∩ S| >= multiplicity for every set S. Universe capped at `cap`.
GroundTruth hitting_oracle(const SetSystem& sys, int cap = 20);

/// Brute-force 2-independent-set search in the unit disk graph on `points`
/// (unit-radius disks, so adjacency means Euclidean distance <= 2): a
/// k-subset pairwise at graph distance > 2. Point count capped at `cap`.
GroundTruth two_is_oracle(const std::vector<std::pair<double, double>>& points,
                          int k, int cap = 15);

/// Hitting-Set reduction: one candidate per element, one voter per set,
/// weight-1 edges for non-membership, a weight-2 candidate clique, shortest
/// path distances. Feasible at t = 3 iff the set system has a
/// (multi-)hitting set of size k.
std::pair<Instance, GroundTruth> gen_hitting_set(const SetSystem& sys);

/// Unit-disk-graph reduction: a voter and a candidate co-located at each
/// point, lambda = k-1, t = smallest Euclidean distance between non-neighbors.
std::pair<Instance, GroundTruth> gen_udg(
    const std::vector<std::pair<double, double>>& points, int k);

/// Seeded uniform sampling in the unit cube; identical seeds give
/// bit-identical instances.
Instance gen_random_euclidean(int num_voters, int num_candidates, int dim,
                              int k, int lambda, std::uint64_t seed);

/// Random set system with non-empty proper subsets of the universe.
SetSystem gen_random_set_system(int universe_size, int num_sets, int k,
                                int multiplicity, std::uint64_t seed);

/// Random planar point set for the UDG reduction, scaled so that some pairs
/// are adjacent (distance <= 1) and some are not.
std::vector<std::pair<double, double>> gen_random_points(int n, double side,
                                                         std::uint64_t seed);

}  // namespace obnox

#endif
