#include "obnox/planar.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace obnox {

namespace {

// Geometric tolerances at unit scale (all geometry runs on coordinates
// rescaled by 1/t, so disks have radius 1).
constexpr double kGeoTol = 1e-9;
constexpr double kPerturbMag = 1e-7;
constexpr int kMaxPerturbRetries = 3;
constexpr int kMaxBacktrackPaths = 64;

double wrap_pi(double a) {
  while (a > std::numbers::pi) a -= 2.0 * std::numbers::pi;
  while (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

struct Geo {
  std::vector<Vec2> centers;  // unit circles, one per candidate representative
  std::vector<Vec2> voters;
  std::vector<IntersectionPoint> pts;  // circles field holds local rep indices
  std::vector<std::vector<int>> on_circle;
};

double pt_angle(const Geo& g, int pid, int c) {
  const Vec2 d = g.pts[pid].coords - g.centers[c];
  return std::atan2(d.y, d.x);
}

bool on_circle_of(const Geo& g, int pid, int c) {
  return g.pts[pid].circles.first == c || g.pts[pid].circles.second == c;
}

int other_circle(const Geo& g, int pid, int c) {
  const auto& pr = g.pts[pid].circles;
  return pr.first == c ? pr.second : pr.first;
}

// Minor-arc span between two points on circle c; negative if no minor arc.
double minor_span(const Geo& g, int a, int b, int c) {
  if (a == b || !on_circle_of(g, a, c) || !on_circle_of(g, b, c)) return -1.0;
  const double span = std::abs(wrap_pi(pt_angle(g, b, c) - pt_angle(g, a, c)));
  if (span <= kGeoTol || span >= std::numbers::pi - kGeoTol) return -1.0;
  return span;
}

bool angle_on_arc(double theta_a, double theta_b, double theta) {
  const double delta = wrap_pi(theta_b - theta_a);
  const double s = wrap_pi(theta - theta_a);
  if (delta >= 0.0) return s >= 0.0 && s <= delta;
  return s <= 0.0 && s >= delta;
}

// Minimum of f(q) = dot(q - p0, n) over the minor arc a..b of circle c.
double arc_min_halfplane(const Geo& g, int c, int a, int b, Vec2 p0, Vec2 n) {
  const Vec2 A = g.pts[a].coords;
  const Vec2 B = g.pts[b].coords;
  double m = std::min(dot(A - p0, n), dot(B - p0, n));
  const double theta_min = std::atan2(-n.y, -n.x);
  if (angle_on_arc(pt_angle(g, a, c), pt_angle(g, b, c), theta_min)) {
    const Vec2 q = g.centers[c] + Vec2{std::cos(theta_min), std::sin(theta_min)};
    m = std::min(m, dot(q - p0, n));
  }
  return m;
}

bool tri_contains_strict(Vec2 q, Vec2 a, Vec2 b, Vec2 c) {
  const double s1 = cross(b - a, q - a);
  const double s2 = cross(c - b, q - b);
  const double s3 = cross(a - c, q - c);
  const double tol = kGeoTol * (norm(b - a) + norm(c - b) + norm(a - c));
  if (s1 > tol && s2 > tol && s3 > tol) return true;
  if (s1 < -tol && s2 < -tol && s3 < -tol) return true;
  return false;
}

// Strict membership in the circular segment between the chord a..b of circle
// c and its minor arc (the side of the chord away from the center).
bool cap_contains_strict(const Geo& g, int c, Vec2 a, Vec2 b, Vec2 q) {
  if (norm(q - g.centers[c]) >= 1.0 - kGeoTol) return false;
  const Vec2 ab = b - a;
  const double s_center = cross(ab, g.centers[c] - a);
  const double s_q = cross(ab, q - a);
  const double tol = kGeoTol * std::max(norm(ab), 1.0);
  if (s_center > 0.0) return s_q < -tol;
  return s_q > tol;
}

bool cap_contains_any_voter(const Geo& g, int c, int pa, int pb) {
  const Vec2 a = g.pts[pa].coords;
  const Vec2 b = g.pts[pb].coords;
  for (const Vec2& v : g.voters)
    if (cap_contains_strict(g, c, a, b, v)) return true;
  return false;
}

// Strict membership in the region bounded by segments xp, xy and the minor
// arc between p and y on circle c. The arc may bulge toward or away from x.
bool wedge_contains(const Geo& g, Vec2 x, Vec2 y, Vec2 p, int c, Vec2 q) {
  const Vec2 chord = y - p;
  const double s_center = cross(chord, g.centers[c] - p);
  const double s_x = cross(chord, x - p);
  const bool bulge_away = (s_center > 0.0) == (s_x > 0.0);
  if (bulge_away) {
    if (tri_contains_strict(q, x, p, y)) return true;
    return cap_contains_strict(g, c, p, y, q);
  }
  // Arc cuts into the triangle: keep only points clearly outside the disk
  // segment carved off by the arc.
  if (!tri_contains_strict(q, x, p, y)) return false;
  const double tol = kGeoTol * std::max(norm(chord), 1.0);
  const double s_q = cross(chord, q - p);
  const bool center_side = (s_center > 0.0) ? (s_q > tol) : (s_q < -tol);
  if (center_side) return true;
  return norm(q - g.centers[c]) > 1.0 + kGeoTol;
}

bool wedge_contains_any_voter(const Geo& g, int x, int y, int p, int c) {
  const Vec2 X = g.pts[x].coords;
  const Vec2 Y = g.pts[y].coords;
  const Vec2 P = g.pts[p].coords;
  for (const Vec2& v : g.voters)
    if (wedge_contains(g, X, Y, P, c, v)) return true;
  return false;
}

// Both arcs sharing endpoint p must lie in the intersection of the closed
// tangent halfplanes of D(c) and D(c_prev) at p.
bool right_turn_geo(const Geo& g, int p, int z, int c_prev, int y, int c) {
  const Vec2 P = g.pts[p].coords;
  const Vec2 n_c = g.centers[c] - P;
  const Vec2 n_cp = g.centers[c_prev] - P;
  if (arc_min_halfplane(g, c, p, y, P, n_cp) < -kGeoTol) return false;
  if (arc_min_halfplane(g, c_prev, p, z, P, n_c) < -kGeoTol) return false;
  if (arc_min_halfplane(g, c, p, y, P, n_c) < -kGeoTol) return false;
  if (arc_min_halfplane(g, c_prev, p, z, P, n_cp) < -kGeoTol) return false;
  return true;
}

// Deterministic perturbation direction for candidate j on retry r.
Vec2 perturb_dir(int j, int r) {
  std::uint64_t z = (static_cast<std::uint64_t>(j) << 8) + r + 1;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  const double ang =
      static_cast<double>(z >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
  return {std::cos(ang), std::sin(ang)};
}

// Unit-scale geometry for one perturbation attempt. Returns false on a
// degeneracy (tangency or three near-concurrent circles).
bool build_geo(const Instance& inst, double t, int attempt, Geo& g) {
  g = Geo{};
  const auto& reps = inst.representatives();
  const int m = static_cast<int>(reps.size());
  g.centers.resize(m);
  for (int j = 0; j < m; ++j) {
    const auto& xy = inst.space().coords()[inst.candidate_point(reps[j])];
    Vec2 c{xy[0] / t, xy[1] / t};
    if (attempt > 0) c = c + kPerturbMag * perturb_dir(j, attempt);
    g.centers[j] = c;
  }
  for (int v = 0; v < inst.num_voters(); ++v) {
    const auto& xy = inst.space().coords()[inst.voter_point(v)];
    g.voters.push_back({xy[0] / t, xy[1] / t});
  }
  g.on_circle.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double d = norm(g.centers[j] - g.centers[i]);
      if (d >= 2.0) continue;  // handled by preprocessing (disjoint pair)
      if (d > 2.0 - kGeoTol || d < kGeoTol) return false;  // tangent/co-located
      const double h = std::sqrt(std::max(0.0, 1.0 - d * d / 4.0));
      const Vec2 mid = 0.5 * (g.centers[i] + g.centers[j]);
      const Vec2 dir = (1.0 / d) * (g.centers[j] - g.centers[i]);
      const Vec2 left{-dir.y, dir.x};
      for (const Vec2 q : {mid + h * left, mid - h * left}) {
        IntersectionPoint p;
        p.coords = q;
        p.circles = {i, j};
        const int pid = static_cast<int>(g.pts.size());
        g.pts.push_back(p);
        g.on_circle[i].push_back(pid);
        g.on_circle[j].push_back(pid);
      }
    }
  }
  // General position: no intersection point may lie on a third circle.
  for (const auto& p : g.pts) {
    for (int c = 0; c < m; ++c) {
      if (c == p.circles.first || c == p.circles.second) continue;
      if (std::abs(norm(p.coords - g.centers[c]) - 1.0) <= kGeoTol)
        return false;
    }
  }
  return true;
}

struct Node {
  int y, p, c, i;
  std::vector<int> parents;
};

struct Recovered {
  int size = 0;
  Committee padded;
};

bool better(const Recovered& a, const Recovered& b) {
  if (a.size != b.size) return a.size < b.size;
  return a.padded < b.padded;
}

// Arc DP for one fixed start pair (x, c1). Verified committees are merged
// into `best`.
void search_from(const Instance& inst, double t, const Geo& g, int c1, int x,
                 std::optional<Recovered>& best) {
  const auto& reps = inst.representatives();
  std::vector<Node> nodes;
  std::map<std::array<int, 4>, int> index;

  auto add_node = [&](int y, int p, int c, int i, int parent) {
    const std::array<int, 4> key{y, p, c, i};
    auto it = index.find(key);
    if (it == index.end()) {
      nodes.push_back({y, p, c, i, {}});
      it = index.emplace(key, static_cast<int>(nodes.size()) - 1).first;
    }
    if (parent >= 0) nodes[it->second].parents.push_back(parent);
  };

  for (int y : g.on_circle[c1]) {
    if (y == x) continue;
    if (minor_span(g, x, y, c1) < 0.0) continue;
    if (cap_contains_any_voter(g, c1, x, y)) continue;
    add_node(y, x, c1, 2, -1);
  }

  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    const Node node = nodes[idx];  // copy: nodes may reallocate
    if (node.i >= inst.k()) continue;
    const int c_next = other_circle(g, node.y, node.c);
    if (c_next == c1) continue;
    for (int y_new : g.on_circle[c_next]) {
      if (y_new == node.y) continue;
      if (minor_span(g, node.y, y_new, c_next) < 0.0) continue;
      if (!right_turn_geo(g, node.y, node.p, node.c, y_new, c_next)) continue;
      if (wedge_contains_any_voter(g, x, y_new, node.y, c_next)) continue;
      add_node(y_new, node.y, c_next, node.i + 1, static_cast<int>(idx));
    }
  }

  // Closing scan: an arc back from y to x on a circle shared by both.
  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    const Node& node = nodes[idx];
    for (int close : {g.pts[x].circles.first, g.pts[x].circles.second}) {
      if (close == node.c || close == c1) continue;
      if (!on_circle_of(g, node.y, close)) continue;
      if (minor_span(g, x, node.y, close) < 0.0) continue;
      if (cap_contains_any_voter(g, close, x, node.y)) continue;
      if (!right_turn_geo(g, node.y, node.p, node.c, x, close)) continue;

      // Backtrack (all parent choices, capped) and verify for real.
      int paths = 0;
      std::vector<int> chain_circles{close};
      std::function<bool(int)> dfs = [&](int at) -> bool {
        if (paths >= kMaxBacktrackPaths) return false;
        chain_circles.push_back(nodes[at].c);
        bool done = false;
        if (nodes[at].i == 2) {
          ++paths;
          std::vector<int> members;
          for (int lc : chain_circles) members.push_back(reps[lc]);
          std::sort(members.begin(), members.end());
          members.erase(std::unique(members.begin(), members.end()),
                        members.end());
          if (static_cast<int>(members.size()) <= inst.k()) {
            Committee padded = pad_committee(inst, members, inst.k());
            if (is_feasible(inst, padded.members, t)) {
              Recovered rec{static_cast<int>(members.size()),
                            std::move(padded)};
              if (!best || better(rec, *best)) best = std::move(rec);
              done = true;
            }
          }
        } else {
          for (int par : nodes[at].parents)
            if (dfs(par)) {
              done = true;
              break;
            }
        }
        chain_circles.pop_back();
        return done;
      };
      dfs(static_cast<int>(idx));
    }
  }
}

}  // namespace

std::pair<Vec2, Vec2> circle_pair_points(Vec2 center_a, Vec2 center_b,
                                         double t) {
  if (!(t > 0.0)) throw ValidationError("circle_pair_points: t must be positive");
  const Vec2 ab = center_b - center_a;
  const double d = norm(ab);
  const double tol = kGeoTol * t;
  if (d <= tol)
    throw DegeneracyError("circle_pair_points: co-located centers");
  if (d >= 2.0 * t - tol)
    throw DegeneracyError("circle_pair_points: tangent or disjoint circles");
  const double h = std::sqrt(std::max(0.0, t * t - d * d / 4.0));
  const Vec2 mid = center_a + 0.5 * ab;
  const Vec2 dir = (1.0 / d) * ab;
  const Vec2 left{-dir.y, dir.x};
  return {mid + h * left, mid + (-h) * left};
}

PreprocessOutcome preprocess_small(const Instance& inst, double t) {
  if (inst.lambda() != 1 || inst.space().kind() != SpaceKind::Euclidean ||
      inst.space().dim() != 2)
    throw Unsupported("preprocess_small: requires lambda = 1 in R^2");
  const auto& reps = inst.representatives();
  const int m = static_cast<int>(reps.size());
  const int k = inst.k();

  auto disk_has_voter = [&](int c) {
    for (int v = 0; v < inst.num_voters(); ++v)
      if (!approx_geq(inst.dist(v, c), t)) return true;
    return false;
  };
  for (int c : reps)
    if (!disk_has_voter(c)) return {PreprocessOutcome::SolvedBySingleton, {c}};

  if (k >= 2) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (approx_geq(inst.dist_cc(reps[i], reps[j]), 2.0 * t))
          return {PreprocessOutcome::SolvedByDisjointPair, {reps[i], reps[j]}};
  }

  if (k >= 3) {
    // All pairs now intersect; a triple has empty common intersection iff
    // every pairwise intersection point is outside the third disk.
    auto coord = [&](int c) {
      const auto& xy = inst.space().coords()[inst.candidate_point(c)];
      return Vec2{xy[0], xy[1]};
    };
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int l = j + 1; l < m; ++l) {
          const std::array<std::array<int, 3>, 3> combos{
              {{reps[i], reps[j], reps[l]},
               {reps[i], reps[l], reps[j]},
               {reps[j], reps[l], reps[i]}}};
          bool empty = true;
          for (const auto& [a, b, third] : combos) {
            const auto pts = circle_pair_points(coord(a), coord(b), t);
            if (approx_leq(norm(pts.first - coord(third)), t) ||
                approx_leq(norm(pts.second - coord(third)), t)) {
              empty = false;
              break;
            }
          }
          if (empty)
            return {PreprocessOutcome::SolvedByEmptyTriple,
                    {reps[i], reps[j], reps[l]}};
        }
  }
  return {PreprocessOutcome::Proceed, {}};
}

bool region_contains_voter(const Instance& inst, Vec2 x, Vec2 y, Vec2 p, int c,
                           double t) {
  Geo g;
  if (!build_geo(inst, t, 0, g))
    throw DegeneracyError("region_contains_voter: degenerate configuration");
  const int local = static_cast<int>(
      std::lower_bound(inst.representatives().begin(),
                       inst.representatives().end(),
                       inst.candidate_rep()[c]) -
      inst.representatives().begin());
  const double inv = 1.0 / t;
  for (const Vec2& v : g.voters)
    if (wedge_contains(g, inv * x, inv * y, inv * p, local, v)) return true;
  return false;
}

bool right_turn(const Instance& inst, double t, Vec2 p, Vec2 z, int c_prev,
                Vec2 y, int c) {
  if (c == c_prev)
    throw ValidationError("right_turn: arcs on the same circle");
  // Build a two-point pseudo-geometry around p scaled to unit radius.
  Geo g;
  if (!build_geo(inst, t, 0, g))
    throw DegeneracyError("right_turn: degenerate configuration");
  const auto& reps = inst.representatives();
  auto local_of = [&](int cand) {
    return static_cast<int>(
        std::lower_bound(reps.begin(), reps.end(),
                         inst.candidate_rep()[cand]) -
        reps.begin());
  };
  const int lc = local_of(c);
  const int lcp = local_of(c_prev);
  const double inv = 1.0 / t;
  const Vec2 P = inv * p;
  const Vec2 Z = inv * z;
  const Vec2 Y = inv * y;
  // Inline the halfplane checks on raw coordinates (the named points need
  // not be precomputed intersection points here).
  auto arc_min = [&](int circ, Vec2 A, Vec2 B, Vec2 n) {
    double mn = std::min(dot(A - P, n), dot(B - P, n));
    const double theta_min = std::atan2(-n.y, -n.x);
    const Vec2 ca = A - g.centers[circ];
    const Vec2 cb = B - g.centers[circ];
    if (angle_on_arc(std::atan2(ca.y, ca.x), std::atan2(cb.y, cb.x),
                     theta_min)) {
      const Vec2 q =
          g.centers[circ] + Vec2{std::cos(theta_min), std::sin(theta_min)};
      mn = std::min(mn, dot(q - P, n));
    }
    return mn;
  };
  const Vec2 n_c = g.centers[lc] - P;
  const Vec2 n_cp = g.centers[lcp] - P;
  return arc_min(lc, P, Y, n_cp) >= -kGeoTol &&
         arc_min(lcp, P, Z, n_c) >= -kGeoTol &&
         arc_min(lc, P, Y, n_c) >= -kGeoTol &&
         arc_min(lcp, P, Z, n_cp) >= -kGeoTol;
}

std::optional<Committee> planar_decide(const Instance& inst, double t) {
  if (inst.lambda() != 1)
    throw Unsupported("planar_decide: requires lambda = 1");
  if (inst.space().kind() != SpaceKind::Euclidean || inst.space().dim() != 2)
    throw Unsupported("planar_decide: requires 2-dimensional Euclidean space");
  if (!(t > 0.0) || !std::isfinite(t))
    throw ValidationError("planar_decide: t must be positive and finite");

  const PreprocessOutcome pre = preprocess_small(inst, t);
  if (pre.kind != PreprocessOutcome::Proceed)
    return pad_committee(inst, pre.witness, inst.k());
  if (inst.k() == 1) return std::nullopt;
  if (inst.representatives().size() == 1) return std::nullopt;

  for (int attempt = 0; attempt <= kMaxPerturbRetries; ++attempt) {
    Geo g;
    if (!build_geo(inst, t, attempt, g)) continue;
    std::optional<Recovered> best;
    const int m = static_cast<int>(inst.representatives().size());
    for (int c1 = 0; c1 < m; ++c1)
      for (int x : g.on_circle[c1]) search_from(inst, t, g, c1, x, best);
    if (best) return best->padded;
    return std::nullopt;
  }
  throw DegeneracyError(
      "planar_decide: unresolved degeneracy after perturbation retries");
}

std::pair<double, Committee> planar_optimize(const Instance& inst) {
  const std::vector<double> grid = critical_values(inst);
  // Every committee's objective is on the grid, so the smallest positive
  // grid value is always feasible; binary search the threshold.
  int lo = 0;
  int hi = static_cast<int>(grid.size()) - 1;
  while (lo < hi && grid[lo] <= 0.0) ++lo;
  if (grid[lo] <= 0.0) {
    // Only the zero distance exists: any committee is optimal.
    std::vector<int> empty;
    return {0.0, pad_committee(inst, empty, inst.k())};
  }
  std::optional<Committee> witness = planar_decide(inst, grid[lo]);
  if (!witness) {
    // t* = 0: co-located voter-candidate pairs force a zero optimum.
    std::vector<int> empty;
    return {0.0, pad_committee(inst, empty, inst.k())};
  }
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    auto res = planar_decide(inst, grid[mid]);
    if (res) {
      lo = mid;
      witness = std::move(res);
    } else {
      hi = mid - 1;
    }
  }
  return {grid[lo], *witness};
}

SolveResult planar_solve(const Instance& inst, std::optional<double> t) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.algorithm = "planar";
  res.guarantee = 1.0;
  if (t) {
    auto committee = planar_decide(inst, *t);
    if (committee) {
      res.status = Status::Feasible;
      res.value = objective(inst, committee->members);
      res.committee = std::move(committee);
    } else {
      res.status = Status::Infeasible;
    }
  } else {
    auto [value, witness] = planar_optimize(inst);
    res.status = Status::Feasible;
    res.value = objective(inst, witness.members);
    res.committee = std::move(witness);
  }
  res.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return res;
}

}  // namespace obnox
