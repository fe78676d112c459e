#include "obnox/approx.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "obnox/parallel.hpp"

namespace obnox {

namespace {

double candidate_score(const Instance& inst, int c) {
  double s = std::numeric_limits<double>::infinity();
  for (int v = 0; v < inst.num_voters(); ++v)
    s = std::min(s, inst.dist(v, c));
  return s;
}

}  // namespace

Net half_net(const Instance& inst, int ball_center, double ball_radius,
             double sep) {
  if (!(sep > 0.0) && ball_radius > 0.0)
    throw ValidationError("half_net: separation must be positive");
  Net net;
  net.radius = sep;
  net.ball_center = ball_center;
  net.ball_radius = ball_radius;
  for (int c = 0; c < inst.num_candidates(); ++c) {
    if (!approx_leq(inst.dist(ball_center, c), ball_radius)) continue;
    bool separated = true;
    for (int m : net.members) {
      if (approx_leq(inst.dist_cc(c, m), sep)) {
        separated = false;
        break;
      }
    }
    if (separated) net.members.push_back(c);
  }
  return net;
}

SolveResult quarter_approx(const Instance& inst, int threads) {
  if (inst.lambda() != 1)
    throw Unsupported("quarter_approx: requires lambda = 1");
  const auto start = std::chrono::steady_clock::now();
  const int nv = inst.num_voters();
  const int nc = inst.num_candidates();
  const int k = inst.k();
  const std::size_t n_pairs = static_cast<std::size_t>(nv) * nc;

  struct Best {
    double value = -1.0;
    Committee committee;
  };
  auto eval_pair = [&](std::size_t pair) {
    const int p = static_cast<int>(pair / nc);
    const int cg = static_cast<int>(pair % nc);
    const double t = inst.dist(p, cg);

    std::vector<int> ball;
    for (int c = 0; c < nc; ++c)
      if (approx_leq(inst.dist(p, c), t)) ball.push_back(c);

    const Net net = half_net(inst, p, t, t / 2.0);

    std::vector<int> chosen;
    if (k == 1) {
      // The pairwise-separation argument needs two members; with a single
      // seat the guessed candidate itself is the right committee, and the
      // guess loop then finds the exact optimum.
      chosen.push_back(cg);
    } else if (static_cast<int>(net.members.size()) >= k) {
      chosen.assign(net.members.begin(), net.members.begin() + k);
    } else {
      chosen = net.members;
      std::vector<bool> used(nc, false);
      for (int c : chosen) used[c] = true;
      for (int c : ball) {
        if (static_cast<int>(chosen.size()) >= k) break;
        if (!used[c]) {
          used[c] = true;
          chosen.push_back(c);
        }
      }
      // The ball itself may hold fewer than k candidates; fall back to C.
      for (int c = 0; c < nc && static_cast<int>(chosen.size()) < k; ++c) {
        if (!used[c]) {
          used[c] = true;
          chosen.push_back(c);
        }
      }
    }
    std::sort(chosen.begin(), chosen.end());
    Best b;
    b.value = objective(inst, chosen);
    b.committee.members = std::move(chosen);
    return b;
  };

  const std::size_t chunks =
      (threads > 1 && n_pairs >= 64) ? 64 : std::size_t{1};
  auto scan = [&](std::size_t ci) {
    const std::size_t lo = n_pairs * ci / chunks;
    const std::size_t hi = n_pairs * (ci + 1) / chunks;
    Best best;
    for (std::size_t pair = lo; pair < hi; ++pair) {
      Best b = eval_pair(pair);
      if (b.value > best.value ||
          (b.value == best.value && b.committee < best.committee))
        best = std::move(b);
    }
    return best;
  };
  const auto results = run_chunks<Best>(chunks, threads, scan);
  Best best;
  for (const auto& b : results) {
    if (b.committee.members.empty()) continue;
    if (b.value > best.value ||
        (b.value == best.value && b.committee < best.committee))
      best = b;
  }

  SolveResult res;
  res.status = Status::Approx;
  res.committee = best.committee;
  res.value = objective(inst, best.committee.members);
  res.guarantee = 0.25;
  res.algorithm = "quarter";
  res.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return res;
}

SolveResult solve_lambda_eq_k(const Instance& inst, std::optional<double> t) {
  if (inst.lambda() != inst.k())
    throw Unsupported("solve_lambda_eq_k: requires lambda = k");
  const auto start = std::chrono::steady_clock::now();
  const int nc = inst.num_candidates();
  const int k = inst.k();
  std::vector<double> score(nc);
  for (int c = 0; c < nc; ++c) score[c] = candidate_score(inst, c);

  SolveResult res;
  res.algorithm = "lambda-k";
  res.guarantee = 1.0;
  if (t) {
    std::vector<int> far;
    for (int c = 0; c < nc; ++c)
      if (approx_geq(score[c], *t)) far.push_back(c);
    if (static_cast<int>(far.size()) >= k) {
      res.status = Status::Feasible;
      Committee committee;
      committee.members.assign(far.begin(), far.begin() + k);
      res.value = objective(inst, committee.members);
      res.committee = std::move(committee);
    } else {
      res.status = Status::Infeasible;
    }
  } else {
    std::vector<int> order(nc);
    for (int c = 0; c < nc; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return score[a] > score[b];
    });
    Committee committee;
    committee.members.assign(order.begin(), order.begin() + k);
    std::sort(committee.members.begin(), committee.members.end());
    res.status = Status::Feasible;
    res.value = objective(inst, committee.members);
    res.committee = std::move(committee);
  }
  res.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return res;
}

}  // namespace obnox
