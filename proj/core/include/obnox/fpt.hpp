#ifndef OBNOX_FPT_HPP
#define OBNOX_FPT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "obnox/instance.hpp"
#include "obnox/types.hpp"

namespace obnox {

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

/// Greedy maximal candidate set with pairwise distance >= separation.
struct SeparatedSet {
  std::vector<int> members;  // candidate ordinals, ascending
  double separation = 0.0;
};

/// Per-anchor nets and marked candidates of the representative construction.
struct RepresentativeSet {
  std::vector<std::vector<int>> nets;    // Q_c per anchor, anchor order
  std::vector<std::vector<int>> marked;  // marked extras per anchor
  std::vector<int> all;                  // N union all R_c, ascending, unique
  double epsilon = 0.0;
  double t = 0.0;
};

/// Index-order greedy scan; admits a candidate iff it is at distance >= sep
/// from every admitted member.
SeparatedSet greedy_separated(const Instance& inst, double sep);

struct FptasOptions {
  std::uint64_t enum_cap = kDefaultEnumCap;
  // Return the best subset found in the enumeration instead of the first
  // one meeting (1-eps)t.
  bool best_of_enumeration = false;
};

/// Bicriteria decision: if the instance is exactly feasible at t, returns a
/// committee with objective >= (1-eps)t; if it returns nullopt, no committee
/// achieves t.
std::optional<Committee> fptas_decide(const Instance& inst, double t,
                                      double eps,
                                      const FptasOptions& opt = {});

/// Descending scan over critical values with fptas_decide; the returned value
/// is certified >= (1-eps) times the exact optimum.
SolveResult fptas_optimize(const Instance& inst, double eps,
                           const FptasOptions& opt = {});

/// Exposed for testing: the representative set construction at threshold t.
RepresentativeSet build_representatives(const Instance& inst,
                                        const SeparatedSet& anchors, double t,
                                        double eps);

}  // namespace obnox

#endif
