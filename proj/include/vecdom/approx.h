#ifndef VECDOM_APPROX_H_
#define VECDOM_APPROX_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "vecdom/feasibility.h"
#include "vecdom/variants.h"

namespace vecdom {

// SET MULTICOVER: choose family members so that every element u lies in at
// least req[u] chosen sets. Each set may be chosen once.
struct MulticoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> family;
  std::vector<int> req;
};

// Family = open (or closed) neighborhoods of g, req = demands.
MulticoverInstance NeighborhoodMulticover(const Graph& g,
                                          Neighborhood neighborhood,
                                          const RequirementVector& demands);

// Greedy: repeatedly take the set covering the most residual demand, i.e.
// maximizing Σ_{u ∈ set} [remaining(u) > 0], smallest index on ties.
// Returns selected indices in selection order. Throws kInfeasible when some
// req[u] exceeds the number of sets containing u.
std::vector<int> GreedyMulticover(const MulticoverInstance& mc);

// ln(x) + 1, or 1 when x <= 1 (the trivial case where greedy is exact).
double LogBound(double x);

// Total-open instances; bound ln Δ + 1.
Solution GreedyTotalVector(const Instance& inst);

// Total-closed instances; bound ln(Δ + 1) + 1.
Solution GreedyMultipleDomination(const Instance& inst);

struct GreedyStep {
  Vertex vertex;
  int64_t gain;
  int64_t coverage_after;
};

// Submodular-cover greedy on f for partial-open instances. Vertices with
// k_v > d(v) are put in S before the loop. `bound` is ln(max_y f({y})) + 1,
// `worst_case_bound` is ln(2Δ) + 1. When `trace` is set, it receives every
// greedy step (forced vertices excluded).
Solution GreedyVectorDomination(
    const Instance& inst,
    const std::function<void(const GreedyStep&)>& trace = nullptr);

}  // namespace vecdom

#endif  // VECDOM_APPROX_H_
