#include "obnox/fpt.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "obnox/approx.hpp"
#include "obnox/oracle.hpp"

namespace obnox {

namespace {

bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SeparatedSet greedy_separated(const Instance& inst, double sep) {
  SeparatedSet out;
  out.separation = sep;
  for (int c = 0; c < inst.num_candidates(); ++c) {
    bool ok = true;
    for (int m : out.members) {
      if (!approx_geq(inst.dist_cc(c, m), sep)) {
        ok = false;
        break;
      }
    }
    if (ok) out.members.push_back(c);
  }
  return out;
}

RepresentativeSet build_representatives(const Instance& inst,
                                        const SeparatedSet& anchors, double t,
                                        double eps) {
  RepresentativeSet rep;
  rep.epsilon = eps;
  rep.t = t;
  const int nc = inst.num_candidates();
  const double net_sep = eps * t / 4.0;

  for (int anchor : anchors.members) {
    // Q: greedy eps*t/4-net of B(anchor, 2t) intersected with C.
    std::vector<int> net;
    std::vector<bool> in_net(nc, false);
    for (int c = 0; c < nc; ++c) {
      if (!approx_leq(inst.dist_cc(anchor, c), 2.0 * t)) continue;
      bool separated = true;
      for (int m : net) {
        if (approx_leq(inst.dist_cc(c, m), net_sep)) {
          separated = false;
          break;
        }
      }
      if (separated) {
        net.push_back(c);
        in_net[c] = true;
      }
    }
    if (inst.space().kind() == SpaceKind::Euclidean &&
        inst.space().dim() == 2 && eps > 0.0 && t > 0.0) {
      const double bound = (1.0 + 16.0 / eps) * (1.0 + 16.0 / eps);
      if (static_cast<double>(net.size()) > bound)
        throw Error("representative net exceeds planar packing bound");
    }

    // Marking phase: each net point recruits its lambda-1 closest unmarked
    // candidates outside the net, ties broken by candidate index.
    std::vector<bool> marked(nc, false);
    std::vector<int> marks;
    for (int q : net) {
      std::vector<int> order;
      for (int c = 0; c < nc; ++c)
        if (!in_net[c] && !marked[c]) order.push_back(c);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.dist_cc(q, a) < inst.dist_cc(q, b);
      });
      const int want = inst.lambda() - 1;
      for (int i = 0; i < want && i < static_cast<int>(order.size()); ++i) {
        marked[order[i]] = true;
        marks.push_back(order[i]);
      }
    }
    rep.nets.push_back(std::move(net));
    rep.marked.push_back(std::move(marks));
  }

  std::vector<int> all = anchors.members;
  for (const auto& q : rep.nets) all.insert(all.end(), q.begin(), q.end());
  for (const auto& m : rep.marked) all.insert(all.end(), m.begin(), m.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  rep.all = std::move(all);
  return rep;
}

std::optional<Committee> fptas_decide(const Instance& inst, double t,
                                      double eps, const FptasOptions& opt) {
  if (!(eps > 0.0 && eps < 1.0))
    throw ValidationError("fptas: epsilon must be in (0,1)");
  const int k = inst.k();
  const int lambda = inst.lambda();
  const double target = (1.0 - eps) * t;

  if (lambda == k) {
    auto res = solve_lambda_eq_k(inst, t);
    if (res.status == Status::Feasible) return res.committee;
    return std::nullopt;
  }

  const SeparatedSet sep = greedy_separated(inst, 2.0 * t);
  if (static_cast<int>(sep.members.size()) >= lambda + 1) {
    std::vector<int> base(sep.members.begin(),
                          sep.members.begin() + lambda + 1);
    return pad_committee(inst, base, k);
  }

  const RepresentativeSet rep = build_representatives(inst, sep, t, eps);
  const std::vector<int>& S = rep.all;

  if (static_cast<int>(S.size()) <= k) {
    Committee padded = pad_committee(inst, S, k);
    if (approx_geq(objective(inst, padded.members), target)) return padded;
    return std::nullopt;
  }

  const int ns = static_cast<int>(S.size());
  const std::uint64_t total = binomial(ns, k);
  if (total > opt.enum_cap)
    throw CapExceeded(
        "fptas enumeration cap exceeded: C(" + std::to_string(ns) + "," +
        std::to_string(k) + ") = " + std::to_string(total) + " > " +
        std::to_string(opt.enum_cap) +
        " (|S| is bounded by O_d(lambda^2 (1/eps)^d))");

  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::optional<Committee> best;
  double best_val = -1.0;
  do {
    std::vector<int> members(k);
    for (int i = 0; i < k; ++i) members[i] = S[idx[i]];
    const double val = objective(inst, members);
    if (approx_geq(val, target)) {
      Committee committee;
      committee.members = std::move(members);
      if (!opt.best_of_enumeration) return committee;
      if (val > best_val) {
        best_val = val;
        best = std::move(committee);
      }
    }
  } while (next_combination(idx, ns));
  return best;
}

SolveResult fptas_optimize(const Instance& inst, double eps,
                           const FptasOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> grid = critical_values(inst);
  SolveResult res;
  res.algorithm = "fptas";
  res.guarantee = 1.0 - eps;
  res.status = Status::Infeasible;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    auto committee = fptas_decide(inst, *it, eps, opt);
    if (committee) {
      res.status = Status::Approx;
      res.value = objective(inst, committee->members);
      res.committee = std::move(committee);
      break;
    }
  }
  res.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return res;
}

}  // namespace obnox
