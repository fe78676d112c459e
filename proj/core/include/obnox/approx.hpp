#ifndef OBNOX_APPROX_HPP
#define OBNOX_APPROX_HPP

#include <optional>
#include <vector>

#include "obnox/instance.hpp"
#include "obnox/types.hpp"

namespace obnox {

/// Greedy net over the candidates of a ball: pairwise separation strictly
/// above `radius`, every in-ball candidate within `radius` of some member.
struct Net {
  std::vector<int> members;  // candidate ordinals, ascending
  double radius = 0.0;       // separation parameter
  int ball_center = -1;      // voter ordinal
  double ball_radius = 0.0;
};

/// Greedy maximal net over candidates within ball_radius of the voter
/// `ball_center` (non-strict membership). Scans candidates in index order and
/// admits c iff dist(c, m) > sep for every admitted m.
Net half_net(const Instance& inst, int ball_center, double ball_radius,
             double sep);

/// 1/4-approximation for lambda = 1 in arbitrary metrics. Enumerates all
/// voter-candidate guess pairs and returns the best committee found by
/// recomputed objective; guarantee 1/4.
SolveResult quarter_approx(const Instance& inst, int threads = 1);

/// Exact solver for lambda = k. Decision mode when t is given, optimization
/// mode otherwise: score(c) = min_v dist(v, c), take the top-k by score.
SolveResult solve_lambda_eq_k(const Instance& inst,
                              std::optional<double> t = std::nullopt);

}  // namespace obnox

#endif
