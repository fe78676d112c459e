#include "obnox/oracle.hpp"

#include <algorithm>
#include <limits>

#include "obnox/parallel.hpp"

namespace obnox {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::int64_t>::max();

// Advances comb to the next k-subset of [0, n) in lexicographic order.
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

// The k-subset of [0, n) with the given lexicographic rank.
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<int> comb(k);
  int start = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = start; v < n; ++v) {
      const std::uint64_t cnt = binomial(n - v - 1, k - pos - 1);
      if (rank < cnt) {
        comb[pos] = v;
        start = v + 1;
        break;
      }
      rank -= cnt;
    }
  }
  return comb;
}

std::uint64_t check_cap(const Instance& inst, std::uint64_t cap) {
  const std::uint64_t total = binomial(inst.num_candidates(), inst.k());
  if (total > cap)
    throw CapExceeded("oracle cap exceeded: C(" +
                      std::to_string(inst.num_candidates()) + "," +
                      std::to_string(inst.k()) + ") = " + std::to_string(total) +
                      " > " + std::to_string(cap));
  return total;
}

std::size_t chunk_count(std::uint64_t total, int threads) {
  if (threads <= 1 || total < 1024) return 1;
  return 64;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > kSat / num) return kSat;
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::optional<Committee> oracle_decide(const Instance& inst, double t,
                                       std::uint64_t cap, int threads) {
  const std::uint64_t total = check_cap(inst, cap);
  const int n = inst.num_candidates();
  const int k = inst.k();
  const std::size_t chunks = chunk_count(total, threads);

  struct Hit {
    std::uint64_t rank = kSat;
    Committee committee;
  };
  auto scan = [&](std::size_t ci) {
    const std::uint64_t lo = total * ci / chunks;
    const std::uint64_t hi = total * (ci + 1) / chunks;
    Hit hit;
    if (lo >= hi) return hit;
    std::vector<int> comb = unrank_combination(n, k, lo);
    for (std::uint64_t r = lo; r < hi; ++r) {
      if (is_feasible(inst, comb, t)) {
        hit.rank = r;
        hit.committee.members = comb;
        return hit;
      }
      next_combination(comb, n);
    }
    return hit;
  };

  const auto results = run_chunks<Hit>(chunks, threads, scan);
  const Hit* best = nullptr;
  for (const auto& h : results)
    if (h.rank != kSat && (!best || h.rank < best->rank)) best = &h;
  if (!best) return std::nullopt;
  return best->committee;
}

OracleReport oracle_optimize(const Instance& inst, std::uint64_t cap,
                             int threads) {
  const std::uint64_t total = check_cap(inst, cap);
  const int n = inst.num_candidates();
  const int k = inst.k();
  const std::size_t chunks = chunk_count(total, threads);

  struct Best {
    double value = -1.0;
    std::uint64_t rank = kSat;
    Committee committee;
  };
  auto scan = [&](std::size_t ci) {
    const std::uint64_t lo = total * ci / chunks;
    const std::uint64_t hi = total * (ci + 1) / chunks;
    Best best;
    if (lo >= hi) return best;
    std::vector<int> comb = unrank_combination(n, k, lo);
    for (std::uint64_t r = lo; r < hi; ++r) {
      const double val = objective(inst, comb);
      if (val > best.value) {
        best.value = val;
        best.rank = r;
        best.committee.members = comb;
      }
      next_combination(comb, n);
    }
    return best;
  };

  const auto results = run_chunks<Best>(chunks, threads, scan);
  Best best;
  for (const auto& b : results) {
    if (b.rank == kSat) continue;
    if (b.value > best.value || (b.value == best.value && b.rank < best.rank)) {
      best = b;
    }
  }
  OracleReport report;
  report.optimal_value = best.value;
  report.witness = best.committee;
  report.subsets_examined = total;
  return report;
}

}  // namespace obnox
