#ifndef VECDOM_THRESHOLD_ORDER_H_
#define VECDOM_THRESHOLD_ORDER_H_

#include <vector>

#include "vecdom/graph.h"

namespace vecdom {

// Construction order v_1..v_n of a threshold graph: v_i is isolated or
// dominating in G_i = G[{v_1..v_i}]. Positions are 0-based here, so
// order[0] is v_1.
struct ThresholdOrdering {
  enum class Kind { kIsolated, kDominating };

  std::vector<Vertex> order;
  // kind[0] is always kIsolated (a single vertex is both).
  std::vector<Kind> kind;
  // p[i] = number of positions j > i with kind[j] == kDominating.
  std::vector<int> p;
};

// Peels vertices off the graph, each time removing the smallest-id dominating
// vertex of the remainder, or failing that the smallest-id isolated one.
// Throws kNotThreshold if neither exists.
ThresholdOrdering ThresholdEliminationOrder(const Graph& g);

bool IsThresholdGraph(const Graph& g);

}  // namespace vecdom

#endif  // VECDOM_THRESHOLD_ORDER_H_
