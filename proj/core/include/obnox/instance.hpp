#ifndef OBNOX_INSTANCE_HPP
#define OBNOX_INSTANCE_HPP

#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include "obnox/types.hpp"

namespace obnox {

enum class SpaceKind { Euclidean, Graph, Matrix };

/// A finite metric space over points 0..num_points-1.
///
/// Euclidean spaces store coordinates and compute distances on the fly;
/// graph spaces store the edge list plus the all-pairs shortest-path table
/// computed at construction; matrix spaces store the table directly.
class MetricSpace {
 public:
  static MetricSpace euclidean(int dim, std::vector<std::vector<double>> coords);
  static MetricSpace graph(int num_vertices,
                           std::vector<std::tuple<int, int, double>> edges);
  static MetricSpace matrix(std::vector<std::vector<double>> table,
                            bool validate_triangle = false);

  double dist(int a, int b) const;
  int num_points() const { return num_points_; }
  SpaceKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<std::vector<double>>& coords() const { return coords_; }
  const std::vector<std::tuple<int, int, double>>& edges() const { return edges_; }
  const std::vector<std::vector<double>>& table() const { return table_; }

  MetricSpace() = default;  // empty placeholder, filled by the factories

 private:
  SpaceKind kind_ = SpaceKind::Matrix;
  int num_points_ = 0;
  int dim_ = 0;
  std::vector<std::vector<double>> coords_;                // Euclidean
  std::vector<std::tuple<int, int, double>> edges_;        // Graph
  std::vector<std::vector<double>> table_;                 // Graph / Matrix
};

struct InstanceSpec {
  MetricSpace space;
  std::vector<int> voters;      // point ids
  std::vector<int> candidates;  // point ids
  int k = 0;
  int lambda = 0;
  std::optional<double> t;
};

/// A validated, immutable problem instance. Voters and candidates are
/// referenced by ordinal (0..num_voters-1 / 0..num_candidates-1) in all
/// solver APIs; each ordinal maps to a point of the underlying space.
class Instance {
 public:
  explicit Instance(InstanceSpec spec);

  int num_voters() const { return static_cast<int>(voters_.size()); }
  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int k() const { return k_; }
  int lambda() const { return lambda_; }
  const std::optional<double>& t() const { return t_; }
  const MetricSpace& space() const { return space_; }
  int voter_point(int v) const { return voters_.at(v); }
  int candidate_point(int c) const { return candidates_.at(c); }

  /// Distance between two raw point references of the space.
  double dist_points(int a, int b) const;
  /// Voter-candidate distance by ordinal.
  double dist(int voter, int candidate) const;
  /// Candidate-candidate distance by ordinal.
  double dist_cc(int c1, int c2) const;

  /// Lowest-index co-located candidate for each candidate ordinal.
  /// Candidates at mutual distance zero are interchangeable in committees.
  const std::vector<int>& candidate_rep() const { return candidate_rep_; }
  /// Distinct representative ordinals, ascending.
  const std::vector<int>& representatives() const { return representatives_; }
  /// Number of candidates sharing each representative.
  const std::vector<int>& rep_multiplicity() const { return rep_multiplicity_; }

 private:
  MetricSpace space_;
  std::vector<int> voters_;
  std::vector<int> candidates_;
  int k_;
  int lambda_;
  std::optional<double> t_;
  std::vector<int> candidate_rep_;
  std::vector<int> representatives_;
  std::vector<int> rep_multiplicity_;
};

Instance build_instance(InstanceSpec spec);

/// Distance from voter v to the lam-th farthest member of S.
double d_lambda(const Instance& inst, int voter, const std::vector<int>& S,
                int lam);

/// min over voters of d_lambda(v, S, inst.lambda()).
double objective(const Instance& inst, const std::vector<int>& S);

/// objective(S) >= t, compared with the shared relative tolerance.
bool is_feasible(const Instance& inst, const std::vector<int>& S, double t);

/// Sorted, deduplicated voter-candidate distances. The objective of any
/// committee is a member of this list.
std::vector<double> critical_values(const Instance& inst);

/// Extends S to exactly k members with the lowest-index candidates not
/// already present. Objective never decreases under padding.
Committee pad_committee(const Instance& inst, const std::vector<int>& S, int k);

}  // namespace obnox

#endif
