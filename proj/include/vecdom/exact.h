#ifndef VECDOM_EXACT_H_
#define VECDOM_EXACT_H_

#include <optional>

#include "vecdom/feasibility.h"
#include "vecdom/graph.h"
#include "vecdom/variants.h"

namespace vecdom {

// --- Complete graphs -------------------------------------------------------

// Minimum vector dominating set on K_n: the p highest-demand vertices, where
// p is the least i with i >= k(v_{i+1}) in descending demand order
// (k(v_{n+1}) := 0). Counting sort, O(n). Throws kNotComplete.
Solution SolveCompleteVector(const Graph& g, const RequirementVector& k);

// Minimum total vector dominating set on K_n. With K = max demand and M the
// vertices attaining it: K vertices outside M if |M| <= n - K, otherwise any
// K + 1 vertices. Throws kNotComplete, kInfeasible (K > n - 1).
Solution SolveCompleteTotal(const Graph& g, const RequirementVector& k);

// --- Trees -----------------------------------------------------------------

struct TreeSolveOptions {
  Vertex root = 0;
  // Re-checks after every iteration that every processed vertex outside S
  // already has k(v) neighbors in S. Quadratic; for tests.
  bool check_sweep_invariant = false;
};

// Bottom-up sweep in reverse BFS order with per-vertex counters of children
// in S. Linear time. Throws kNotATree.
Solution SolveTreeVector(const Graph& g, const RequirementVector& k,
                         const TreeSolveOptions& options = {});

// --- P4-free graphs --------------------------------------------------------

// Dynamic program over the modified cotree, for partial or total scope with
// open neighborhoods. Throws kNotCograph, kWrongVariant, kInfeasible.
Solution SolveCograph(const Instance& inst);

// --- Threshold graphs ------------------------------------------------------

// Vector domination (partial, open) via the elimination ordering, O(nm).
// Throws kNotThreshold.
Solution SolveThresholdVector(const Graph& g, const RequirementVector& k);

// Same recurrence keeping only set sizes; O(n + m).
int ThresholdVectorSize(const Graph& g, const RequirementVector& k);

// --- Oracle ----------------------------------------------------------------

inline constexpr int kDefaultOracleCap = 20;

// Exhaustive search by increasing cardinality, lexicographic within a
// cardinality; the first feasible set is returned. Throws kTooLarge when
// n > cap, kInfeasible when no subset works.
Solution BruteForceMinimum(const Instance& inst, int cap = kDefaultOracleCap);

// --- Dispatch --------------------------------------------------------------

enum class Method {
  kAuto,
  kGreedy,
  kOracle,
  kTree,
  kCograph,
  kThreshold,
  kComplete,
};

struct SolveOptions {
  Method method = Method::kAuto;
  int oracle_cap = kDefaultOracleCap;
};

// Auto: complete -> closed-form, tree -> sweep (partial), threshold ->
// elimination DP (partial) or cotree DP (total), P4-free -> cotree DP, else
// the oracle when n <= cap and greedy beyond. Partial closed instances are
// solved in their equivalent open form.
Solution Solve(const Instance& inst, const SolveOptions& options = {});

}  // namespace vecdom

#endif  // VECDOM_EXACT_H_
