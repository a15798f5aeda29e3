#ifndef VECDOM_FEASIBILITY_H_
#define VECDOM_FEASIBILITY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vecdom/graph.h"
#include "vecdom/variants.h"

namespace vecdom {

struct Solution {
  enum class Status { kFeasible, kInfeasible, kUnknown };
  enum class Quality { kOptimal, kApproxWithBound, kHeuristic };

  VertexSet vertices;  // sorted, distinct
  Status status = Status::kUnknown;
  Quality quality = Quality::kHeuristic;
  // Proven approximation factor for kApproxWithBound.
  std::optional<double> bound;
  // Worst-case form of the same guarantee (e.g. ln(2Δ)+1), when it differs
  // from `bound`.
  std::optional<double> worst_case_bound;
  std::string solver_path;

  int size() const { return static_cast<int>(vertices.size()); }
};

std::string_view ToString(Solution::Quality q);
std::string_view ToString(Solution::Status s);

struct FeasibilityReport {
  bool feasible = false;
  std::vector<Vertex> violated;  // ascending
};

// Evaluates the compiled constraint of `inst` for every vertex in scope.
// `set` may be in any order; duplicates are ignored. Throws kOutOfRange for
// ids outside the graph.
FeasibilityReport IsFeasible(const Instance& inst, std::span<const Vertex> set);

// Sorts, deduplicates and range-checks a vertex set.
VertexSet NormalizeSet(std::span<const Vertex> set, int n);

// Coverage function f(S) = Σ_v τ_v(S) with
//   τ_v(S) = k_v                      if v ∈ S
//          = min(|S ∩ N(v)|, k_v)     otherwise.
// Requires a partial-open instance (kWrongVariant otherwise).
int64_t EvalF(const Instance& inst, std::span<const Vertex> set);

// f(V) = Σ_v k_v.
int64_t FullCoverage(const Instance& inst);

// Incrementally maintained S together with |S ∩ N(v)| for every v, so that
// marginal gains cost O(d(w)).
class CoverageState {
 public:
  // Keeps a reference to `inst`, which must outlive the state.
  explicit CoverageState(const Instance& inst);

  // f(S ∪ {w}) - f(S). Throws kAlreadyInSet when w ∈ S.
  int64_t MarginalGain(Vertex w) const;
  void Add(Vertex w);

  bool Contains(Vertex v) const { return in_set_[v]; }
  int count(Vertex v) const { return count_[v]; }
  int64_t total() const { return total_; }
  const VertexSet& members() const { return members_; }

 private:
  const Instance& inst_;
  std::vector<char> in_set_;
  std::vector<int> count_;
  VertexSet members_;
  int64_t total_ = 0;
};

}  // namespace vecdom

#endif  // VECDOM_FEASIBILITY_H_
