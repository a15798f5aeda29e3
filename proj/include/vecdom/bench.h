#ifndef VECDOM_BENCH_H_
#define VECDOM_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vecdom/exact.h"

namespace vecdom {

enum class BenchFamily { kTree, kCograph, kThreshold, kGnp };

// Accepts "tree", "cograph", "threshold", "gnp". Throws kMalformed.
BenchFamily ParseBenchFamily(std::string_view name);
std::string_view ToString(BenchFamily f);

struct BenchConfig {
  BenchFamily family = BenchFamily::kTree;
  std::vector<int> sizes;  // ascending
  uint64_t seed = 1;
  int reps = 3;
  double p = 0.4;  // edge probability for kGnp
  int oracle_cap = kDefaultOracleCap;
};

struct BenchRow {
  BenchFamily family;
  int n = 0;
  int64_t m = 0;
  double median_seconds = 0;
  std::string solver_path;
  int solution_size = 0;
  // Greedy size over optimum, when the oracle fits under the cap.
  std::optional<double> greedy_ratio;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  std::string Table() const;
  std::string Csv() const;
};

// One random graph with random demands per size, the family's dedicated
// solver timed over `reps` runs (median). Deterministic apart from timings.
BenchReport BenchSuite(const BenchConfig& config);

}  // namespace vecdom

#endif  // VECDOM_BENCH_H_
