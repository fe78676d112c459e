#ifndef OBNOX_ORACLE_HPP
#define OBNOX_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "obnox/instance.hpp"
#include "obnox/types.hpp"

namespace obnox {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

struct OracleReport {
  double optimal_value = 0.0;
  Committee witness;
  std::uint64_t subsets_examined = 0;
};

/// C(n, k), saturating at 2^63-1 instead of overflowing.
std::uint64_t binomial(int n, int k);

/// First (lexicographic) k-subset S with is_feasible(S, t), or nullopt.
/// Throws CapExceeded when C(|C|, k) exceeds `cap`.
std::optional<Committee> oracle_decide(const Instance& inst, double t,
                                       std::uint64_t cap = kDefaultOracleCap,
                                       int threads = 1);

/// Exact maximum of objective over all k-subsets; ties broken
/// lexicographically. Same cap semantics as oracle_decide.
OracleReport oracle_optimize(const Instance& inst,
                             std::uint64_t cap = kDefaultOracleCap,
                             int threads = 1);

}  // namespace obnox

#endif
