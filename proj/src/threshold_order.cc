#include "vecdom/threshold_order.h"

#include <algorithm>
#include <set>
#include <string>

#include "vecdom/error.h"

namespace vecdom {

ThresholdOrdering ThresholdEliminationOrder(const Graph& g) {
  const int n = g.n();
  // Buckets of remaining vertices keyed by current degree; only the buckets
  // for degree 0 and degree remaining-1 are ever queried.
  std::vector<int> degree(n);
  std::vector<std::set<Vertex>> by_degree(std::max(n, 1));
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    by_degree[degree[v]].insert(v);
  }
  std::vector<bool> removed(n, false);
  std::vector<Vertex> peeled;
  std::vector<ThresholdOrdering::Kind> peeled_kind;
  peeled.reserve(n);
  for (int remaining = n; remaining > 0; --remaining) {
    Vertex chosen = -1;
    auto kind = ThresholdOrdering::Kind::kIsolated;
    if (remaining >= 2 && !by_degree[remaining - 1].empty()) {
      chosen = *by_degree[remaining - 1].begin();
      kind = ThresholdOrdering::Kind::kDominating;
    } else if (!by_degree[0].empty()) {
      chosen = *by_degree[0].begin();
    } else {
      throw Error(ErrorCode::kNotThreshold,
                  "remainder of " + std::to_string(remaining) +
                      " vertices has no isolated or dominating vertex");
    }
    by_degree[degree[chosen]].erase(chosen);
    removed[chosen] = true;
    for (Vertex w : g.neighbors(chosen)) {
      if (removed[w]) continue;
      by_degree[degree[w]].erase(w);
      --degree[w];
      by_degree[degree[w]].insert(w);
    }
    peeled.push_back(chosen);
    peeled_kind.push_back(kind);
  }

  ThresholdOrdering ordering;
  ordering.order.assign(peeled.rbegin(), peeled.rend());
  ordering.kind.assign(peeled_kind.rbegin(), peeled_kind.rend());
  if (n > 0) ordering.kind[0] = ThresholdOrdering::Kind::kIsolated;
  ordering.p.assign(n, 0);
  for (int i = n - 2; i >= 0; --i) {
    ordering.p[i] = ordering.p[i + 1] +
                    (ordering.kind[i + 1] == ThresholdOrdering::Kind::kDominating
                         ? 1
                         : 0);
  }
  return ordering;
}

bool IsThresholdGraph(const Graph& g) {
  try {
    ThresholdEliminationOrder(g);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotThreshold) throw;
    return false;
  }
}

}  // namespace vecdom
