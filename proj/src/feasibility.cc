#include "vecdom/feasibility.h"

#include <algorithm>
#include <numeric>

#include "vecdom/error.h"

namespace vecdom {
namespace {

void RequirePartialOpen(const Instance& inst) {
  if (inst.scope != Scope::kPartial || inst.neighborhood != Neighborhood::kOpen) {
    throw Error(ErrorCode::kWrongVariant,
                "coverage function is defined for partial open instances");
  }
}

}  // namespace

std::string_view ToString(Solution::Quality q) {
  switch (q) {
    case Solution::Quality::kOptimal: return "optimal";
    case Solution::Quality::kApproxWithBound: return "approxWithBound";
    case Solution::Quality::kHeuristic: return "heuristic";
  }
  return "heuristic";
}

std::string_view ToString(Solution::Status s) {
  switch (s) {
    case Solution::Status::kFeasible: return "feasible";
    case Solution::Status::kInfeasible: return "infeasible";
    case Solution::Status::kUnknown: return "unknown";
  }
  return "unknown";
}

VertexSet NormalizeSet(std::span<const Vertex> set, int n) {
  VertexSet out(set.begin(), set.end());
  for (Vertex v : out) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FeasibilityReport IsFeasible(const Instance& inst, std::span<const Vertex> set) {
  const Graph& g = inst.graph;
  std::vector<char> in_set(g.n(), 0);
  for (Vertex v : NormalizeSet(set, g.n())) in_set[v] = 1;
  FeasibilityReport report;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (inst.scope == Scope::kPartial && in_set[v]) continue;
    int count = 0;
    for (Vertex w : g.neighbors(v)) count += in_set[w];
    if (inst.neighborhood == Neighborhood::kClosed) count += in_set[v];
    if (count < inst.demands[v]) report.violated.push_back(v);
  }
  report.feasible = report.violated.empty();
  return report;
}

int64_t EvalF(const Instance& inst, std::span<const Vertex> set) {
  RequirePartialOpen(inst);
  const Graph& g = inst.graph;
  std::vector<char> in_set(g.n(), 0);
  for (Vertex v : NormalizeSet(set, g.n())) in_set[v] = 1;
  int64_t total = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in_set[v]) {
      total += inst.demands[v];
      continue;
    }
    int count = 0;
    for (Vertex w : g.neighbors(v)) count += in_set[w];
    total += std::min(count, inst.demands[v]);
  }
  return total;
}

int64_t FullCoverage(const Instance& inst) {
  return std::accumulate(inst.demands.begin(), inst.demands.end(), int64_t{0});
}

CoverageState::CoverageState(const Instance& inst)
    : inst_(inst), in_set_(inst.n(), 0), count_(inst.n(), 0) {
  RequirePartialOpen(inst);
}

int64_t CoverageState::MarginalGain(Vertex w) const {
  if (in_set_[w]) {
    throw Error(ErrorCode::kAlreadyInSet,
                "vertex " + std::to_string(w) + " already in S");
  }
  const auto& k = inst_.demands;
  // w itself jumps from min(count, k_w) to k_w.
  int64_t gain = k[w] - std::min(count_[w], k[w]);
  for (Vertex u : inst_.graph.neighbors(w)) {
    if (!in_set_[u] && count_[u] < k[u]) ++gain;
  }
  return gain;
}

void CoverageState::Add(Vertex w) {
  total_ += MarginalGain(w);
  in_set_[w] = 1;
  members_.push_back(w);
  for (Vertex u : inst_.graph.neighbors(w)) ++count_[u];
}

}  // namespace vecdom
