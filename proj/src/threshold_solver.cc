#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "vecdom/error.h"
#include "vecdom/exact.h"
#include "vecdom/threshold_order.h"

namespace vecdom {
namespace {

struct Reduction {
  std::vector<char> forced;  // R
  VertexSet rest;            // V - R, ascending
  Graph graph;               // G - R
  RequirementVector demands;
};

// Vertices with k(v) > d(v) are in every solution; drop them and discount
// their neighbors' demands.
Reduction ReduceForced(const Graph& g, const RequirementVector& k) {
  if (static_cast<int>(k.size()) != g.n()) {
    throw Error(ErrorCode::kSizeMismatch, "demand vector length mismatch");
  }
  Reduction red;
  red.forced.assign(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (k[v] > g.degree(v)) {
      red.forced[v] = 1;
    } else {
      red.rest.push_back(v);
    }
  }
  red.graph = g.InducedSubgraph(red.rest);
  red.demands.resize(red.rest.size());
  for (size_t i = 0; i < red.rest.size(); ++i) {
    int in_forced = 0;
    for (Vertex w : g.neighbors(red.rest[i])) in_forced += red.forced[w];
    red.demands[i] = std::max(k[red.rest[i]] - in_forced, 0);
  }
  return red;
}

void CheckIndex(int j, const ThresholdOrdering& ordering, int i) {
  if (j + 1 > ordering.p[i - 1]) {
    throw std::logic_error("threshold table read past p_{i-1} at position " +
                           std::to_string(i));
  }
}

VertexSet WithVertex(const VertexSet& base, Vertex v) {
  VertexSet out;
  out.reserve(base.size() + 1);
  auto pos = std::lower_bound(base.begin(), base.end(), v);
  out.insert(out.end(), base.begin(), pos);
  out.push_back(v);
  out.insert(out.end(), pos, base.end());
  return out;
}

}  // namespace

Solution SolveThresholdVector(const Graph& g, const RequirementVector& k) {
  ThresholdEliminationOrder(g);  // class check on the input graph
  const Reduction red = ReduceForced(g, k);
  const int n = red.graph.n();
  const RequirementVector& kk = red.demands;

  VertexSet answer;
  if (n > 0) {
    const ThresholdOrdering ordering = ThresholdEliminationOrder(red.graph);
    const auto& order = ordering.order;

    // prev[j] = D_{i-1,j}, cur[j] = D_{i,j}; sets are sorted.
    std::vector<VertexSet> prev(ordering.p[0] + 1);
    for (int j = 0; j <= ordering.p[0]; ++j) {
      if (kk[order[0]] > j) prev[j] = {order[0]};
    }
    // V(G_{i-1}) in ascending id order, for picking padding vertices.
    VertexSet earlier{order[0]};
    std::vector<char> mark(n, 0);

    for (int i = 1; i < n; ++i) {
      const Vertex v = order[i];
      std::vector<VertexSet> cur(ordering.p[i] + 1);
      if (ordering.kind[i] == ThresholdOrdering::Kind::kIsolated) {
        for (int j = 0; j <= ordering.p[i]; ++j) {
          cur[j] = kk[v] <= j ? prev[j] : WithVertex(prev[j], v);
        }
      } else {
        for (int j = 0; j <= ordering.p[i]; ++j) {
          CheckIndex(j, ordering, i);
          const int demand = kk[v] - j;
          const int keep = static_cast<int>(prev[j].size());
          const int take = static_cast<int>(prev[j + 1].size()) + 1;
          // v has only i neighbors in G_i; a larger residual demand forces v.
          if (demand <= i && std::max(keep, demand) <= take) {
            int pad = std::max(demand - keep, 0);
            VertexSet padded = prev[j];
            if (pad > 0) {
              for (Vertex w : prev[j]) mark[w] = 1;
              for (Vertex w : earlier) {
                if (pad == 0) break;
                if (!mark[w]) {
                  padded.push_back(w);
                  --pad;
                }
              }
              for (Vertex w : prev[j]) mark[w] = 0;
              std::sort(padded.begin(), padded.end());
            }
            cur[j] = std::move(padded);
          } else {
            cur[j] = WithVertex(prev[j + 1], v);
          }
        }
      }
      earlier.insert(std::lower_bound(earlier.begin(), earlier.end(), v), v);
      prev = std::move(cur);
    }
    for (Vertex v : prev[0]) answer.push_back(red.rest[v]);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (red.forced[v]) answer.push_back(v);
  }
  std::sort(answer.begin(), answer.end());

  Solution solution;
  solution.vertices = std::move(answer);
  solution.status = Solution::Status::kFeasible;
  solution.quality = Solution::Quality::kOptimal;
  solution.solver_path = "threshold";
  return solution;
}

int ThresholdVectorSize(const Graph& g, const RequirementVector& k) {
  ThresholdEliminationOrder(g);
  const Reduction red = ReduceForced(g, k);
  int forced = 0;
  for (char f : red.forced) forced += f;
  const int n = red.graph.n();
  if (n == 0) return forced;
  const RequirementVector& kk = red.demands;
  const ThresholdOrdering ordering = ThresholdEliminationOrder(red.graph);
  const auto& order = ordering.order;

  std::vector<int> prev(ordering.p[0] + 1);
  for (int j = 0; j <= ordering.p[0]; ++j) prev[j] = kk[order[0]] > j ? 1 : 0;
  for (int i = 1; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<int> cur(ordering.p[i] + 1);
    for (int j = 0; j <= ordering.p[i]; ++j) {
      if (ordering.kind[i] == ThresholdOrdering::Kind::kIsolated) {
        cur[j] = prev[j] + (kk[v] > j ? 1 : 0);
      } else {
        CheckIndex(j, ordering, i);
        cur[j] = std::min(std::max(prev[j], kk[v] - j), 1 + prev[j + 1]);
      }
    }
    prev = std::move(cur);
  }
  return prev[0] + forced;
}

}  // namespace vecdom
