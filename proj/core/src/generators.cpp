#include "obnox/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

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

void validate_set_system(const SetSystem& sys) {
  if (sys.universe_size <= 0)
    throw ValidationError("set system: empty universe");
  if (sys.k < 1 || sys.k > sys.universe_size)
    throw ValidationError("set system: k must be in [1, |U|]");
  if (sys.multiplicity < 1)
    throw ValidationError("set system: multiplicity must be >= 1");
  if (sys.sets.empty()) throw ValidationError("set system: no sets");
  for (const auto& s : sys.sets) {
    if (s.empty()) throw ValidationError("set system: empty set");
    for (int e : s)
      if (e < 0 || e >= sys.universe_size)
        throw ValidationError("set system: element out of range");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("set system: duplicate element in a set");
    if (static_cast<int>(s.size()) == sys.universe_size)
      throw ValidationError(
          "set system: set equals the universe (its voter would be "
          "disconnected in the reduction graph)");
  }
}

// Hop distances in the unit disk graph (edges at Euclidean distance <= 1).
std::vector<std::vector<int>> udg_hop_distances(
    const std::vector<std::pair<double, double>>& points) {
  const int n = static_cast<int>(points.size());
  auto euclid = [&](int i, int j) {
    const double dx = points[i].first - points[j].first;
    const double dy = points[i].second - points[j].second;
    return std::sqrt(dx * dx + dy * dy);
  };
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (approx_leq(euclid(i, j), 2.0)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  const int inf = std::numeric_limits<int>::max();
  std::vector<std::vector<int>> hops(n, std::vector<int>(n, inf));
  for (int s = 0; s < n; ++s) {
    auto& d = hops[s];
    d[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (d[v] == inf) {
          d[v] = d[u] + 1;
          q.push(v);
        }
    }
  }
  return hops;
}

}  // namespace

GroundTruth hitting_oracle(const SetSystem& sys, int cap) {
  validate_set_system(sys);
  if (sys.universe_size > cap)
    throw CapExceeded("hitting_oracle: universe larger than cap " +
                      std::to_string(cap));
  GroundTruth gt;
  gt.threshold_t = 3.0;
  gt.note = "exhaustive (multi-)hitting-set search";

  const int max_set = static_cast<int>(
      std::max_element(sys.sets.begin(), sys.sets.end(), [](auto& a, auto& b) {
        return a.size() < b.size();
      })->size());
  if (sys.multiplicity > max_set || sys.multiplicity > sys.k) {
    gt.answer = false;  // no set can be hit multiplicity times
    return gt;
  }

  std::vector<int> comb(sys.k);
  for (int i = 0; i < sys.k; ++i) comb[i] = i;
  do {
    std::vector<bool> in(sys.universe_size, false);
    for (int e : comb) in[e] = true;
    bool all_hit = true;
    for (const auto& s : sys.sets) {
      int hits = 0;
      for (int e : s) hits += in[e] ? 1 : 0;
      if (hits < sys.multiplicity) {
        all_hit = false;
        break;
      }
    }
    if (all_hit) {
      gt.answer = true;
      gt.witness = comb;
      return gt;
    }
  } while (next_combination(comb, sys.universe_size));
  gt.answer = false;
  return gt;
}

GroundTruth two_is_oracle(const std::vector<std::pair<double, double>>& points,
                          int k, int cap) {
  const int n = static_cast<int>(points.size());
  if (n > cap)
    throw CapExceeded("two_is_oracle: point count larger than cap " +
                      std::to_string(cap));
  if (k < 1 || k > n) throw ValidationError("two_is_oracle: k out of range");
  GroundTruth gt;
  gt.note = "exhaustive 2-independent-set search in the unit disk graph";

  const auto hops = udg_hop_distances(points);
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k; ++j)
        if (hops[comb[i]][comb[j]] <= 2) {
          ok = false;
          break;
        }
    if (ok) {
      gt.answer = true;
      gt.witness = comb;
      return gt;
    }
  } while (next_combination(comb, n));
  gt.answer = false;
  return gt;
}

std::pair<Instance, GroundTruth> gen_hitting_set(const SetSystem& sys) {
  validate_set_system(sys);
  const int n_elem = sys.universe_size;
  const int n_sets = static_cast<int>(sys.sets.size());
  // Vertices: candidates (elements) first, then voters (sets).
  std::vector<std::tuple<int, int, double>> edges;
  for (int e = 0; e < n_elem; ++e)
    for (int e2 = e + 1; e2 < n_elem; ++e2)
      edges.emplace_back(e, e2, 2.0);
  for (int s = 0; s < n_sets; ++s) {
    std::vector<bool> in(n_elem, false);
    for (int e : sys.sets[s]) in[e] = true;
    for (int e = 0; e < n_elem; ++e)
      if (!in[e]) edges.emplace_back(e, n_elem + s, 1.0);
  }
  InstanceSpec spec;
  spec.space = MetricSpace::graph(n_elem + n_sets, std::move(edges));
  for (int s = 0; s < n_sets; ++s) spec.voters.push_back(n_elem + s);
  for (int e = 0; e < n_elem; ++e) spec.candidates.push_back(e);
  spec.k = sys.k;
  spec.lambda = sys.multiplicity;
  spec.t = 3.0;
  Instance inst = build_instance(std::move(spec));
  GroundTruth gt = hitting_oracle(sys);
  return {std::move(inst), std::move(gt)};
}

std::pair<Instance, GroundTruth> gen_udg(
    const std::vector<std::pair<double, double>>& points, int k) {
  const int n = static_cast<int>(points.size());
  if (k < 2 || k > n) throw ValidationError("gen_udg: k must be in [2, n]");

  auto euclid = [&](int i, int j) {
    const double dx = points[i].first - points[j].first;
    const double dy = points[i].second - points[j].second;
    return std::sqrt(dx * dx + dy * dy);
  };
  double t = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = euclid(i, j);
      if (d > 2.0) t = std::min(t, d);
    }
  if (!std::isfinite(t))
    throw ValidationError(
        "gen_udg: trivial no-instance (no point pair more than 2 apart)");

  std::vector<std::vector<double>> coords;
  coords.reserve(2 * n);
  for (const auto& [x, y] : points) coords.push_back({x, y});
  for (const auto& [x, y] : points) coords.push_back({x, y});
  InstanceSpec spec;
  spec.space = MetricSpace::euclidean(2, std::move(coords));
  for (int i = 0; i < n; ++i) spec.voters.push_back(i);
  for (int i = 0; i < n; ++i) spec.candidates.push_back(n + i);
  spec.k = k;
  spec.lambda = k - 1;
  spec.t = t;
  Instance inst = build_instance(std::move(spec));

  GroundTruth gt = two_is_oracle(points, k);
  gt.threshold_t = t;
  return {std::move(inst), std::move(gt)};
}

Instance gen_random_euclidean(int num_voters, int num_candidates, int dim,
                              int k, int lambda, std::uint64_t seed) {
  if (num_voters < 1 || num_candidates < 1 || dim < 1)
    throw ValidationError("gen_random_euclidean: sizes must be positive");
  SplitMix64 rng(seed);
  std::vector<std::vector<double>> coords;
  coords.reserve(num_voters + num_candidates);
  for (int i = 0; i < num_voters + num_candidates; ++i) {
    std::vector<double> p(dim);
    for (int d = 0; d < dim; ++d) p[d] = rng.next_double();
    coords.push_back(std::move(p));
  }
  InstanceSpec spec;
  spec.space = MetricSpace::euclidean(dim, std::move(coords));
  for (int i = 0; i < num_voters; ++i) spec.voters.push_back(i);
  for (int i = 0; i < num_candidates; ++i)
    spec.candidates.push_back(num_voters + i);
  spec.k = k;
  spec.lambda = lambda;
  return build_instance(std::move(spec));
}

SetSystem gen_random_set_system(int universe_size, int num_sets, int k,
                                int multiplicity, std::uint64_t seed) {
  if (universe_size < 2)
    throw ValidationError("gen_random_set_system: universe too small");
  SplitMix64 rng(seed);
  SetSystem sys;
  sys.universe_size = universe_size;
  sys.k = k;
  sys.multiplicity = multiplicity;
  for (int s = 0; s < num_sets; ++s) {
    // Non-empty proper subset: size in [1, universe_size - 1].
    const int size =
        1 + static_cast<int>(rng.next_below(universe_size - 1));
    std::vector<int> pool(universe_size);
    for (int i = 0; i < universe_size; ++i) pool[i] = i;
    std::vector<int> chosen;
    for (int i = 0; i < size; ++i) {
      const auto j = rng.next_below(pool.size());
      chosen.push_back(pool[j]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    }
    std::sort(chosen.begin(), chosen.end());
    sys.sets.push_back(std::move(chosen));
  }
  return sys;
}

std::vector<std::pair<double, double>> gen_random_points(int n, double side,
                                                         std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::pair<double, double>> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i)
    pts.emplace_back(rng.next_double() * side, rng.next_double() * side);
  return pts;
}

}  // namespace obnox
