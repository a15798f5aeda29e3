#include <algorithm>
#include <string>

#include "vecdom/error.h"
#include "vecdom/exact.h"

namespace vecdom {
namespace {

void RequireComplete(const Graph& g, const RequirementVector& k) {
  if (!g.IsComplete()) {
    throw Error(ErrorCode::kNotComplete, "graph is not complete");
  }
  if (static_cast<int>(k.size()) != g.n()) {
    throw Error(ErrorCode::kSizeMismatch, "demand vector length mismatch");
  }
}

Solution Optimal(VertexSet vertices, const char* path) {
  std::sort(vertices.begin(), vertices.end());
  Solution solution;
  solution.vertices = std::move(vertices);
  solution.status = Solution::Status::kFeasible;
  solution.quality = Solution::Quality::kOptimal;
  solution.solver_path = path;
  return solution;
}

}  // namespace

Solution SolveCompleteVector(const Graph& g, const RequirementVector& k) {
  RequireComplete(g, k);
  const int n = g.n();
  // Stable counting sort by descending demand; demands >= n share the top
  // bucket since they all force the vertex.
  std::vector<std::vector<Vertex>> buckets(n + 1);
  for (Vertex v = 0; v < n; ++v) buckets[std::min(k[v], n)].push_back(v);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int d = n; d >= 0; --d) {
    order.insert(order.end(), buckets[d].begin(), buckets[d].end());
  }
  auto demand_at = [&](int i) { return i < n ? k[order[i]] : 0; };
  int p = 0;
  while (p < demand_at(p)) ++p;
  return Optimal(VertexSet(order.begin(), order.begin() + p),
                 "complete-vector");
}

Solution SolveCompleteTotal(const Graph& g, const RequirementVector& k) {
  RequireComplete(g, k);
  const int n = g.n();
  const int max_demand = n == 0 ? 0 : *std::max_element(k.begin(), k.end());
  if (max_demand > n - 1 && max_demand > 0) {
    throw Error(ErrorCode::kInfeasible,
                "demand " + std::to_string(max_demand) + " exceeds degree " +
                    std::to_string(n - 1));
  }
  VertexSet chosen;
  int outside_max = 0;
  for (Vertex v = 0; v < n; ++v) outside_max += k[v] < max_demand ? 1 : 0;
  if (n - outside_max <= n - max_demand) {
    for (Vertex v = 0; v < n && static_cast<int>(chosen.size()) < max_demand;
         ++v) {
      if (k[v] < max_demand) chosen.push_back(v);
    }
  } else {
    for (Vertex v = 0; v <= max_demand; ++v) chosen.push_back(v);
  }
  return Optimal(std::move(chosen), "complete-total");
}

}  // namespace vecdom
