#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "obnox/generators.hpp"
#include "obnox/planar.hpp"

using namespace obnox;

namespace {

Instance plane_instance(std::vector<Vec2> voters, std::vector<Vec2> cands,
                        int k, std::optional<double> t = std::nullopt) {
  std::vector<std::vector<double>> coords;
  for (Vec2 v : voters) coords.push_back({v.x, v.y});
  for (Vec2 c : cands) coords.push_back({c.x, c.y});
  InstanceSpec spec;
  spec.space = MetricSpace::euclidean(2, std::move(coords));
  for (std::size_t i = 0; i < voters.size(); ++i)
    spec.voters.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < cands.size(); ++i)
    spec.candidates.push_back(static_cast<int>(voters.size() + i));
  spec.k = k;
  spec.lambda = 1;
  spec.t = t;
  return build_instance(std::move(spec));
}

// Reference membership test: the region boundary (segment x-p, minor arc
// p->y, segment y-x) approximated as a dense polygon, then even-odd ray
// casting. Independent of the production orientation-test implementation.
std::vector<Vec2> region_polygon(Vec2 x, Vec2 y, Vec2 p, Vec2 center,
                                 double t) {
  std::vector<Vec2> poly{x, p};
  const double a_p = std::atan2(p.y - center.y, p.x - center.x);
  const double a_y = std::atan2(y.y - center.y, y.x - center.x);
  double delta = a_y - a_p;
  while (delta > std::numbers::pi) delta -= 2.0 * std::numbers::pi;
  while (delta < -std::numbers::pi) delta += 2.0 * std::numbers::pi;
  const int steps = 720;
  for (int s = 1; s < steps; ++s) {
    const double a = a_p + delta * s / steps;
    poly.push_back(center + Vec2{t * std::cos(a), t * std::sin(a)});
  }
  poly.push_back(y);
  return poly;
}

bool point_in_polygon(const std::vector<Vec2>& poly, Vec2 q) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[j];
    if ((a.y > q.y) != (b.y > q.y)) {
      const double xint = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (q.x < xint) in = !in;
    }
  }
  return in;
}

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  auto side = [](Vec2 p, Vec2 q, Vec2 r) {
    const double v = cross(q - p, r - p);
    return v > 0.0 ? 1 : v < 0.0 ? -1 : 0;
  };
  return side(a, b, c) * side(a, b, d) < 0 &&
         side(c, d, a) * side(c, d, b) < 0;
}

// The raster oracle only covers simple (non-self-intersecting) boundaries;
// configurations where a chord from x crosses the arc are not regions the
// dynamic program ever forms.
bool polygon_is_simple(const std::vector<Vec2>& poly) {
  const Vec2 x = poly.front();
  const Vec2 p = poly[1];
  const Vec2 y = poly.back();
  for (std::size_t i = 2; i + 1 < poly.size(); ++i) {
    if (segments_cross(x, p, poly[i], poly[i + 1])) return false;
    if (segments_cross(y, x, poly[i - 1], poly[i])) return false;
  }
  return true;
}

double dist_to_polygon(const std::vector<Vec2>& poly, Vec2 q) {
  double best = 1e300;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Vec2 a = poly[j];
    const Vec2 b = poly[i];
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double s = len2 > 0.0 ? dot(q - a, ab) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    best = std::min(best, norm(q - (a + s * ab)));
  }
  return best;
}

}  // namespace

TEST_CASE("circle_pair_points: symmetric lens") {
  const auto [p1, p2] =
      circle_pair_points({0.0, 0.0}, {2.0, 0.0}, std::sqrt(2.0));
  CHECK(p1.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p1.y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p2.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p2.y == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("circle_pair_points: tangency and co-location rejected") {
  CHECK_THROWS_AS(circle_pair_points({0.0, 0.0}, {2.0, 0.0}, 1.0),
                  DegeneracyError);
  CHECK_THROWS_AS(circle_pair_points({1.0, 1.0}, {1.0, 1.0}, 1.0),
                  DegeneracyError);
}

TEST_CASE("circle_pair_points: both points at distance t from both centers") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const double t = 0.1 + 3.0 * rng.next_double();
    const Vec2 a{10.0 * rng.next_double(), 10.0 * rng.next_double()};
    const double ang = 2.0 * std::numbers::pi * rng.next_double();
    const double d = (0.1 + 1.7 * rng.next_double()) * t;
    const Vec2 b = a + Vec2{d * std::cos(ang), d * std::sin(ang)};
    const auto [p1, p2] = circle_pair_points(a, b, t);
    for (Vec2 p : {p1, p2})
      for (Vec2 c : {a, b}) CHECK(std::abs(norm(p - c) - t) <= 1e-9 * t);
    // Deterministic ordering: first point left of the directed line a->b.
    CHECK(cross(b - a, p1 - a) > 0.0);
  }
}

TEST_CASE("preprocess_small: disjoint pair") {
  const Instance inst =
      plane_instance({{0.0, 0.0}, {3.0, 0.0}}, {{0.0, 0.0}, {3.0, 0.0}}, 2);
  const auto out = preprocess_small(inst, 1.0);
  CHECK(out.kind == PreprocessOutcome::SolvedByDisjointPair);
  REQUIRE(out.witness.size() == 2);
  CHECK(is_feasible(inst, pad_committee(inst, out.witness, 2).members, 1.0));
}

TEST_CASE("preprocess_small: singleton") {
  const Instance inst =
      plane_instance({{0.0, 0.0}}, {{5.0, 0.0}, {0.1, 0.0}}, 1);
  const auto out = preprocess_small(inst, 1.0);
  CHECK(out.kind == PreprocessOutcome::SolvedBySingleton);
  CHECK(out.witness == std::vector<int>{0});
}

TEST_CASE("preprocess_small: pairwise-close triple with a common point") {
  // Unit triangle of circles, all radii 1, plus a voter at each center so
  // the singleton shortcut never fires.
  const std::vector<Vec2> centers = {
      {0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8}};
  const Instance inst = plane_instance(centers, centers, 3);
  const auto out = preprocess_small(inst, 1.0);
  CHECK(out.kind == PreprocessOutcome::Proceed);
}

TEST_CASE("preprocess_small: empty triple") {
  // Equilateral triangle with side 1.8: pairwise lenses exist but the
  // circumradius 1.8/sqrt(3) > 1 leaves the triple intersection empty.
  const double s = 1.8;
  const std::vector<Vec2> centers = {
      {0.0, 0.0}, {s, 0.0}, {s / 2.0, s * std::sqrt(3.0) / 2.0}};
  const Instance inst = plane_instance(centers, centers, 3);
  const auto out = preprocess_small(inst, 1.0);
  CHECK(out.kind == PreprocessOutcome::SolvedByEmptyTriple);
  CHECK(is_feasible(inst, pad_committee(inst, out.witness, 3).members, 1.0));
}

TEST_CASE("region_contains_voter agrees with the rasterized polygon oracle") {
  SplitMix64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const double t = 0.5 + 2.0 * rng.next_double();
    // Three centers pairwise within (0, 2t) so all circle pairs intersect.
    Vec2 a{0.0, 0.0};
    Vec2 b = a + Vec2{(0.4 + 1.4 * rng.next_double()) * t, 0.0};
    const double ang = 0.3 + 2.2 * rng.next_double();
    const double r = (0.4 + 1.4 * rng.next_double()) * t;
    Vec2 c = a + Vec2{r * std::cos(ang), r * std::sin(ang)};
    if (norm(c - b) <= 0.05 * t || norm(c - b) >= 1.9 * t) continue;

    std::vector<Vec2> voters;
    for (int i = 0; i < 25; ++i)
      voters.push_back({-2.0 * t + 6.0 * t * rng.next_double(),
                        -2.0 * t + 6.0 * t * rng.next_double()});
    const Instance inst = plane_instance(voters, {a, b, c}, 3);

    // Arc of candidate 0's circle between its intersections with circle b;
    // the fan origin x comes from the (b, c) pair.
    const auto [p, y] = circle_pair_points(a, b, t);
    const auto xs = circle_pair_points(b, c, t);
    for (Vec2 x : {xs.first, xs.second}) {
      const auto poly = region_polygon(x, y, p, a, t);
      if (!polygon_is_simple(poly)) continue;
      for (std::size_t vi = 0; vi < voters.size(); ++vi) {
        if (dist_to_polygon(poly, voters[vi]) < 1e-3 * t) continue;
        std::vector<Vec2> single = {voters[vi]};
        const Instance one = plane_instance(single, {a, b, c}, 3);
        const bool got = region_contains_voter(one, x, y, p, 0, t);
        const bool expect = point_in_polygon(poly, voters[vi]);
        CHECK(got == expect);
        ++checked;
      }
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("right_turn: lens tip arcs stay in both tangent halfplanes") {
  const std::vector<Vec2> centers = {{0.0, 0.0}, {1.0, 0.0}};
  const Instance inst = plane_instance({{40.0, 40.0}}, centers, 2);
  const double h = std::sqrt(3.0) / 2.0;
  const Vec2 p{0.5, h};
  const Vec2 q{0.5, -h};
  CHECK(right_turn(inst, 1.0, p, q, 0, q, 1));
  CHECK(right_turn(inst, 1.0, q, p, 1, p, 0));
}

TEST_CASE("right_turn: arc escaping a tangent halfplane is rejected") {
  // Chain of three circles; the outgoing arc over the top of the middle
  // circle leaves the halfplane of the first circle's tangent at p.
  const std::vector<Vec2> centers = {{0.0, 0.0}, {1.2, 0.0}, {2.4, 0.0}};
  const Instance inst = plane_instance({{40.0, 40.0}}, centers, 3);
  const auto [p, z] = circle_pair_points(centers[0], centers[1], 1.0);
  const auto [y, y2] = circle_pair_points(centers[1], centers[2], 1.0);
  CHECK_FALSE(right_turn(inst, 1.0, p, z, 0, y, 1));
  (void)y2;
}

TEST_CASE("right_turn: same circle on both sides is an error") {
  const std::vector<Vec2> centers = {{0.0, 0.0}, {1.0, 0.0}};
  const Instance inst = plane_instance({{40.0, 40.0}}, centers, 2);
  CHECK_THROWS_AS(
      right_turn(inst, 1.0, {0.5, 0.8}, {0.5, -0.8}, 1, {0.5, -0.8}, 1),
      ValidationError);
}
