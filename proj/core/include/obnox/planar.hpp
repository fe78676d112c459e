#ifndef OBNOX_PLANAR_HPP
#define OBNOX_PLANAR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "obnox/instance.hpp"
#include "obnox/types.hpp"

namespace obnox {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

/// Intersection point of two equal-radius circle boundaries.
struct IntersectionPoint {
  Vec2 coords;
  std::pair<int, int> circles;  // candidate representative ordinals, a < b
};

/// Minor arc of the radius-t circle around `center` between two intersection
/// points; angular span strictly below pi.
struct Arc {
  int from = -1;  // IntersectionPoint id
  int to = -1;
  int center = -1;  // candidate representative ordinal
  double span = 0.0;
};

/// DP state of the circular-arc dynamic program; the start pair (x, c1) is
/// fixed by the enclosing search.
struct DpKey {
  int x = -1;
  int y = -1;
  int p = -1;
  int c1 = -1;
  int c = -1;
  int i = 0;
};

struct PreprocessOutcome {
  enum Kind {
    SolvedBySingleton,
    SolvedByDisjointPair,
    SolvedByEmptyTriple,
    Proceed
  } kind = Proceed;
  std::vector<int> witness;  // candidate ordinals for the Solved* kinds
};

/// Both points at distance t from both centers; the point left of the
/// directed line a->b comes first. Requires 0 < dist(a,b) < 2t; tangent or
/// degenerate configurations raise DegeneracyError.
std::pair<Vec2, Vec2> circle_pair_points(Vec2 center_a, Vec2 center_b,
                                         double t);

/// Preprocessing of the planar decision: singleton / disjoint-pair /
/// empty-triple shortcuts, otherwise Proceed (all disk subsets intersect, by
/// Helly). Works on candidate representatives.
PreprocessOutcome preprocess_small(const Instance& inst, double t);

/// True iff some voter lies in the region bounded by segments xp, xy and the
/// minor arc from p to y on the radius-t circle around candidate c.
/// Containment is strict up to the shared tolerance; boundary points do not
/// count.
bool region_contains_voter(const Instance& inst, Vec2 x, Vec2 y, Vec2 p, int c,
                           double t);

/// The right-turn predicate of the arc DP: at the shared endpoint p, both
/// arcs must lie in the intersection of the closed tangent halfplanes of
/// D(c) and D(c_prev).
bool right_turn(const Instance& inst, double t, Vec2 p, Vec2 z, int c_prev,
                Vec2 y, int c);

/// Exact planar decision for lambda = 1 in R^2: a committee of size k with
/// objective >= t if one exists, else nullopt.
std::optional<Committee> planar_decide(const Instance& inst, double t);

/// Largest critical value t with planar_decide feasible, plus its witness.
std::pair<double, Committee> planar_optimize(const Instance& inst);

SolveResult planar_solve(const Instance& inst, std::optional<double> t);

}  // namespace obnox

#endif
