#include "vecdom/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "vecdom/approx.h"
#include "vecdom/error.h"
#include "vecdom/generators.h"

namespace vecdom {

BenchFamily ParseBenchFamily(std::string_view name) {
  if (name == "tree") return BenchFamily::kTree;
  if (name == "cograph") return BenchFamily::kCograph;
  if (name == "threshold") return BenchFamily::kThreshold;
  if (name == "gnp") return BenchFamily::kGnp;
  throw Error(ErrorCode::kMalformed, "unknown family '" + std::string(name) + "'");
}

std::string_view ToString(BenchFamily f) {
  switch (f) {
    case BenchFamily::kTree: return "tree";
    case BenchFamily::kCograph: return "cograph";
    case BenchFamily::kThreshold: return "threshold";
    case BenchFamily::kGnp: return "gnp";
  }
  return "?";
}

namespace {

Graph Generate(const BenchConfig& config, int n, Rng& rng) {
  switch (config.family) {
    case BenchFamily::kTree: return RandomTree(n, rng);
    case BenchFamily::kCograph: return RandomCograph(n, rng);
    case BenchFamily::kThreshold: return RandomThreshold(n, rng);
    case BenchFamily::kGnp: return RandomGnp(n, config.p, rng);
  }
  return EmptyGraph(0);
}

Solution RunFamilySolver(BenchFamily family, const Instance& inst) {
  switch (family) {
    case BenchFamily::kTree: return SolveTreeVector(inst.graph, inst.demands);
    case BenchFamily::kCograph: return SolveCograph(inst);
    case BenchFamily::kThreshold:
      return SolveThresholdVector(inst.graph, inst.demands);
    case BenchFamily::kGnp: return GreedyVectorDomination(inst);
  }
  return {};
}

}  // namespace

BenchReport BenchSuite(const BenchConfig& config) {
  BenchReport report;
  Rng rng(config.seed);
  const int reps = std::max(config.reps, 1);
  for (int n : config.sizes) {
    Instance inst;
    inst.graph = Generate(config, n, rng);
    inst.demands = RandomDemands(inst.graph, Neighborhood::kOpen, rng);

    BenchRow row;
    row.family = config.family;
    row.n = n;
    row.m = inst.graph.m();
    std::vector<double> times;
    Solution solution;
    for (int r = 0; r < reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      solution = RunFamilySolver(config.family, inst);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    row.median_seconds = times[times.size() / 2];
    row.solver_path = solution.solver_path;
    row.solution_size = solution.size();
    if (n <= config.oracle_cap && n > 0) {
      const int opt = BruteForceMinimum(inst, config.oracle_cap).size();
      const int greedy = GreedyVectorDomination(inst).size();
      row.greedy_ratio = opt == 0 ? 1.0 : static_cast<double>(greedy) / opt;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string BenchReport::Table() const {
  if (rows.empty()) return "";
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %10s %12s %14s %8s %8s %-10s\n",
                "family", "n", "m", "median_s", "size", "ratio", "solver");
  out << line;
  for (const BenchRow& r : rows) {
    const std::string ratio =
        r.greedy_ratio ? std::to_string(*r.greedy_ratio).substr(0, 6) : "-";
    std::snprintf(line, sizeof line, "%-10s %10d %12lld %14.6f %8d %8s %-10s\n",
                  std::string(ToString(r.family)).c_str(), r.n,
                  static_cast<long long>(r.m), r.median_seconds,
                  r.solution_size, ratio.c_str(), r.solver_path.c_str());
    out << line;
  }
  return out.str();
}

std::string BenchReport::Csv() const {
  if (rows.empty()) return "";
  std::ostringstream out;
  out << "family,n,m,median_seconds,size,greedy_ratio,solver\n";
  for (const BenchRow& r : rows) {
    out << ToString(r.family) << ',' << r.n << ',' << r.m << ','
        << r.median_seconds << ',' << r.solution_size << ',';
    if (r.greedy_ratio) out << *r.greedy_ratio;
    out << ',' << r.solver_path << '\n';
  }
  return out.str();
}

}  // namespace vecdom
