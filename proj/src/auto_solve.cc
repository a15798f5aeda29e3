#include "vecdom/approx.h"
#include "vecdom/cotree.h"
#include "vecdom/error.h"
#include "vecdom/exact.h"
#include "vecdom/threshold_order.h"

namespace vecdom {
namespace {

bool IsTree(const Graph& g) {
  return g.n() > 0 && g.m() == g.n() - 1 && g.IsConnected();
}

Solution Greedy(const Instance& inst) {
  if (inst.scope == Scope::kPartial) return GreedyVectorDomination(inst);
  if (inst.neighborhood == Neighborhood::kOpen) return GreedyTotalVector(inst);
  return GreedyMultipleDomination(inst);
}

Solution RequireOpen(const Instance& inst, Solution (*solver)(const Instance&)) {
  if (inst.neighborhood != Neighborhood::kOpen) {
    throw Error(ErrorCode::kWrongVariant,
                "this solver needs an open-neighborhood instance");
  }
  return solver(inst);
}

Solution RequirePartialOpen(const Instance& inst,
                            Solution (*solver)(const Graph&,
                                               const RequirementVector&)) {
  if (inst.scope != Scope::kPartial || inst.neighborhood != Neighborhood::kOpen) {
    throw Error(ErrorCode::kWrongVariant,
                "this solver needs a partial open instance");
  }
  return solver(inst.graph, inst.demands);
}

Solution AutoSolve(const Instance& inst, int cap) {
  const Graph& g = inst.graph;
  const bool open = inst.neighborhood == Neighborhood::kOpen;
  const bool partial = inst.scope == Scope::kPartial;
  if (open && g.IsComplete()) {
    return partial ? SolveCompleteVector(g, inst.demands)
                   : SolveCompleteTotal(g, inst.demands);
  }
  if (open && partial && IsTree(g)) return SolveTreeVector(g, inst.demands);
  if (open) {
    if (IsThresholdGraph(g)) {
      return partial ? SolveThresholdVector(g, inst.demands)
                     : SolveCograph(inst);
    }
    if (IsCograph(g)) return SolveCograph(inst);
  }
  if (g.n() <= cap) return BruteForceMinimum(inst, cap);
  return Greedy(inst);
}

}  // namespace

Solution Solve(const Instance& original, const SolveOptions& options) {
  if (original.graph.n() == 0) {
    Solution empty;
    empty.status = Solution::Status::kFeasible;
    empty.quality = Solution::Quality::kOptimal;
    empty.solver_path = "trivial";
    return empty;
  }
  const Instance inst = original.scope == Scope::kPartial
                            ? AsPartialOpen(original)
                            : original;
  switch (options.method) {
    case Method::kAuto:
      return AutoSolve(inst, options.oracle_cap);
    case Method::kGreedy:
      return Greedy(inst);
    case Method::kOracle:
      return BruteForceMinimum(inst, options.oracle_cap);
    case Method::kTree:
      return RequirePartialOpen(
          inst, [](const Graph& g, const RequirementVector& k) {
            return SolveTreeVector(g, k);
          });
    case Method::kCograph:
      return RequireOpen(inst, SolveCograph);
    case Method::kThreshold:
      return RequirePartialOpen(inst, SolveThresholdVector);
    case Method::kComplete:
      if (inst.neighborhood != Neighborhood::kOpen) {
        throw Error(ErrorCode::kWrongVariant,
                    "complete-graph solvers need open neighborhoods");
      }
      return inst.scope == Scope::kPartial
                 ? SolveCompleteVector(inst.graph, inst.demands)
                 : SolveCompleteTotal(inst.graph, inst.demands);
  }
  return AutoSolve(inst, options.oracle_cap);
}

}  // namespace vecdom
