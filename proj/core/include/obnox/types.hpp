#ifndef OBNOX_TYPES_HPP
#define OBNOX_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace obnox {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad schema, invariant violation at construction.
struct ValidationError : Error {
  using Error::Error;
};

// Enumeration budget exhausted (oracle subsets, FPT-AS subsets).
struct CapExceeded : Error {
  using Error::Error;
};

// Solver invoked outside its supported parameter range.
struct Unsupported : Error {
  using Error::Error;
};

// Geometric degeneracy that survived perturbation retries.
struct DegeneracyError : Error {
  using Error::Error;
};

// Relative tolerance for all threshold comparisons on reals.
inline constexpr double kRelTol = 1e-9;

inline bool approx_geq(double a, double b) {
  return a >= b - kRelTol * std::max(1.0, std::abs(b));
}

inline bool approx_leq(double a, double b) {
  return a <= b + kRelTol * std::max(1.0, std::abs(b));
}

/// A committee: sorted, duplicate-free candidate ordinals, exactly k of them.
struct Committee {
  std::vector<int> members;

  bool operator==(const Committee& o) const { return members == o.members; }
  bool operator<(const Committee& o) const { return members < o.members; }
};

enum class Status { Feasible, Infeasible, Approx };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Feasible:
      return "feasible";
    case Status::Infeasible:
      return "infeasible";
    case Status::Approx:
      return "approx";
  }
  return "?";
}

struct SolveResult {
  Status status = Status::Infeasible;
  std::optional<Committee> committee;
  double value = 0.0;
  std::optional<double> guarantee;
  std::string algorithm;
  std::int64_t wall_time_ms = 0;
};

}  // namespace obnox

#endif
