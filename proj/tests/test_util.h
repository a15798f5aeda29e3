#ifndef VECDOM_TESTS_TEST_UTIL_H_
#define VECDOM_TESTS_TEST_UTIL_H_

#include <optional>
#include <vector>

#include "vecdom/graph.h"
#include "vecdom/variants.h"

namespace vecdom::testing {

// Reference checks written directly from the definitions, sharing no code
// with the library's solvers or feasibility module.

inline bool NaiveFeasible(const Instance& inst, const std::vector<bool>& in) {
  const int n = inst.n();
  const auto edges = inst.graph.Edges();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : edges) adj[u][v] = adj[v][u] = true;
  for (int v = 0; v < n; ++v) {
    if (inst.scope == Scope::kPartial && in[v]) continue;
    int count = 0;
    for (int u = 0; u < n; ++u) {
      if (in[u] && (adj[v][u] || (u == v && inst.neighborhood ==
                                                Neighborhood::kClosed))) {
        ++count;
      }
    }
    if (count < inst.demands[v]) return false;
  }
  return true;
}

inline bool NaiveFeasible(const Instance& inst, const VertexSet& set) {
  std::vector<bool> in(inst.n(), false);
  for (Vertex v : set) in[v] = true;
  return NaiveFeasible(inst, in);
}

// Minimum size over all 2^n subsets; nullopt when none is feasible.
inline std::optional<int> NaiveOptimum(const Instance& inst) {
  const int n = inst.n();
  std::optional<int> best;
  std::vector<bool> in(n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (best && size >= *best) continue;
    for (int v = 0; v < n; ++v) in[v] = (mask >> v) & 1;
    if (NaiveFeasible(inst, in)) best = size;
  }
  return best;
}

inline Instance MakeInstance(Graph g, RequirementVector k,
                             Scope scope = Scope::kPartial,
                             Neighborhood nbhd = Neighborhood::kOpen) {
  Instance inst;
  inst.graph = std::move(g);
  inst.neighborhood = nbhd;
  inst.scope = scope;
  inst.demands = std::move(k);
  return inst;
}

}  // namespace vecdom::testing

#endif  // VECDOM_TESTS_TEST_UTIL_H_
