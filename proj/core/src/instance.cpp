#include "obnox/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

namespace obnox {

namespace {

std::vector<std::vector<double>> all_pairs_shortest_paths(
    int n, const std::vector<std::tuple<int, int, double>>& edges) {
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& [u, v, w] : edges) {
    adj[u].push_back({v, w});
    adj[v].push_back({u, w});
  }
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> table(n, std::vector<double>(n, inf));
  for (int s = 0; s < n; ++s) {
    auto& d = table[s];
    d[s] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, s});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du > d[u]) continue;
      for (auto [v, w] : adj[u]) {
        if (du + w < d[v]) {
          d[v] = du + w;
          pq.push({d[v], v});
        }
      }
    }
  }
  return table;
}

}  // namespace

MetricSpace MetricSpace::euclidean(int dim,
                                   std::vector<std::vector<double>> coords) {
  if (dim <= 0) throw ValidationError("euclidean: dim must be positive");
  for (const auto& p : coords) {
    if (static_cast<int>(p.size()) != dim)
      throw ValidationError("euclidean: point with wrong dimension");
    for (double x : p)
      if (!std::isfinite(x))
        throw ValidationError("euclidean: non-finite coordinate");
  }
  MetricSpace m;
  m.kind_ = SpaceKind::Euclidean;
  m.dim_ = dim;
  m.num_points_ = static_cast<int>(coords.size());
  m.coords_ = std::move(coords);
  return m;
}

MetricSpace MetricSpace::graph(int num_vertices,
                               std::vector<std::tuple<int, int, double>> edges) {
  if (num_vertices <= 0) throw ValidationError("graph: need at least one vertex");
  for (const auto& [u, v, w] : edges) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
      throw ValidationError("graph: edge endpoint out of range");
    if (u == v) throw ValidationError("graph: self-loop");
    if (!(w > 0.0) || !std::isfinite(w))
      throw ValidationError("graph: edge weight must be positive and finite");
  }
  MetricSpace m;
  m.kind_ = SpaceKind::Graph;
  m.num_points_ = num_vertices;
  m.table_ = all_pairs_shortest_paths(num_vertices, edges);
  for (const auto& row : m.table_)
    for (double d : row)
      if (!std::isfinite(d))
        throw ValidationError("graph: disconnected (infinite distance)");
  m.edges_ = std::move(edges);
  return m;
}

MetricSpace MetricSpace::matrix(std::vector<std::vector<double>> table,
                                bool validate_triangle) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("matrix: empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw ValidationError("matrix: table is not square");
    if (table[i][i] != 0.0)
      throw ValidationError("matrix: nonzero diagonal at (" +
                            std::to_string(i) + "," + std::to_string(i) + ")");
    for (int j = 0; j < n; ++j) {
      if (!(table[i][j] >= 0.0) || !std::isfinite(table[i][j]))
        throw ValidationError("matrix: entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") must be non-negative and finite");
      if (table[i][j] != table[j][i])
        throw ValidationError("matrix: asymmetric at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
    }
  }
  if (validate_triangle) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          if (!approx_leq(table[i][j], table[i][l] + table[l][j]))
            throw ValidationError("matrix: triangle inequality violated at (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ") via " + std::to_string(l));
  }
  MetricSpace m;
  m.kind_ = SpaceKind::Matrix;
  m.num_points_ = n;
  m.table_ = std::move(table);
  return m;
}

double MetricSpace::dist(int a, int b) const {
  if (a < 0 || a >= num_points_ || b < 0 || b >= num_points_)
    throw ValidationError("dist: point reference out of range");
  if (kind_ == SpaceKind::Euclidean) {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) {
      const double d = coords_[a][i] - coords_[b][i];
      s += d * d;
    }
    return std::sqrt(s);
  }
  return table_[a][b];
}

Instance::Instance(InstanceSpec spec)
    : space_(std::move(spec.space)),
      voters_(std::move(spec.voters)),
      candidates_(std::move(spec.candidates)),
      k_(spec.k),
      lambda_(spec.lambda),
      t_(spec.t) {
  if (voters_.empty()) throw ValidationError("instance: no voters");
  if (candidates_.empty()) throw ValidationError("instance: no candidates");
  for (int v : voters_)
    if (v < 0 || v >= space_.num_points())
      throw ValidationError("instance: voter reference out of range");
  for (int c : candidates_)
    if (c < 0 || c >= space_.num_points())
      throw ValidationError("instance: candidate reference out of range");
  if (k_ < 1) throw ValidationError("instance: k must be positive");
  if (k_ > num_candidates())
    throw ValidationError("instance: k exceeds number of candidates");
  if (lambda_ < 1 || lambda_ > k_)
    throw ValidationError("instance: lambda must be in [1, k]");
  if (t_ && (!(*t_ > 0.0) || !std::isfinite(*t_)))
    throw ValidationError("instance: t must be strictly positive and finite");

  const int nc = num_candidates();
  candidate_rep_.resize(nc);
  for (int i = 0; i < nc; ++i) {
    candidate_rep_[i] = i;
    for (int j = 0; j < i; ++j) {
      if (candidate_rep_[j] == j && dist_cc(i, j) == 0.0) {
        candidate_rep_[i] = j;
        break;
      }
    }
  }
  for (int i = 0; i < nc; ++i)
    if (candidate_rep_[i] == i) representatives_.push_back(i);
  rep_multiplicity_.assign(nc, 0);
  for (int i = 0; i < nc; ++i) rep_multiplicity_[candidate_rep_[i]]++;
}

double Instance::dist_points(int a, int b) const { return space_.dist(a, b); }

double Instance::dist(int voter, int candidate) const {
  if (voter < 0 || voter >= num_voters())
    throw ValidationError("dist: voter ordinal out of range");
  if (candidate < 0 || candidate >= num_candidates())
    throw ValidationError("dist: candidate ordinal out of range");
  return space_.dist(voters_[voter], candidates_[candidate]);
}

double Instance::dist_cc(int c1, int c2) const {
  return space_.dist(candidates_.at(c1), candidates_.at(c2));
}

Instance build_instance(InstanceSpec spec) { return Instance(std::move(spec)); }

double d_lambda(const Instance& inst, int voter, const std::vector<int>& S,
                int lam) {
  if (S.empty()) throw ValidationError("d_lambda: empty committee");
  if (lam < 1 || lam > static_cast<int>(S.size()))
    throw ValidationError("d_lambda: lambda out of range for committee size");
  std::vector<double> ds;
  ds.reserve(S.size());
  for (int c : S) ds.push_back(inst.dist(voter, c));
  std::sort(ds.begin(), ds.end(), std::greater<>());
  return ds[lam - 1];
}

double objective(const Instance& inst, const std::vector<int>& S) {
  if (static_cast<int>(S.size()) < inst.lambda())
    throw ValidationError("objective: committee smaller than lambda");
  double best = std::numeric_limits<double>::infinity();
  for (int v = 0; v < inst.num_voters(); ++v)
    best = std::min(best, d_lambda(inst, v, S, inst.lambda()));
  return best;
}

bool is_feasible(const Instance& inst, const std::vector<int>& S, double t) {
  return approx_geq(objective(inst, S), t);
}

std::vector<double> critical_values(const Instance& inst) {
  std::set<double> vals;
  for (int v = 0; v < inst.num_voters(); ++v)
    for (int c = 0; c < inst.num_candidates(); ++c)
      vals.insert(inst.dist(v, c));
  return {vals.begin(), vals.end()};
}

Committee pad_committee(const Instance& inst, const std::vector<int>& S, int k) {
  if (k > inst.num_candidates())
    throw ValidationError("pad_committee: k exceeds number of candidates");
  if (static_cast<int>(S.size()) > k)
    throw ValidationError("pad_committee: committee already larger than k");
  std::vector<bool> in(inst.num_candidates(), false);
  Committee out;
  for (int c : S) {
    if (c < 0 || c >= inst.num_candidates())
      throw ValidationError("pad_committee: candidate ordinal out of range");
    if (!in[c]) {
      in[c] = true;
      out.members.push_back(c);
    }
  }
  for (int c = 0; c < inst.num_candidates() &&
                  static_cast<int>(out.members.size()) < k;
       ++c) {
    if (!in[c]) {
      in[c] = true;
      out.members.push_back(c);
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace obnox
