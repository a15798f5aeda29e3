#ifndef VECDOM_GENERATORS_H_
#define VECDOM_GENERATORS_H_

#include <cstdint>
#include <random>

#include "vecdom/graph.h"
#include "vecdom/variants.h"

namespace vecdom {

using Rng = std::mt19937_64;

// Random recursive tree with shuffled labels. O(n).
Graph RandomTree(int n, Rng& rng);

// Built bottom-up: start from n singletons and repeatedly merge two random
// parts by union or join (each with probability 1/2).
Graph RandomCograph(int n, Rng& rng);

// Vertex i (i >= 1) is added as isolated or dominating with probability 1/2.
// Vertex ids follow the build order.
Graph RandomThreshold(int n, Rng& rng);

// Erdős–Rényi G(n, p).
Graph RandomGnp(int n, double p, Rng& rng);

// Tree from a Prüfer sequence over {0..n-1} (length n - 2, n >= 2).
Graph TreeFromPruefer(int n, const std::vector<int>& code);

// k_v uniform in [0, limit(v)] where limit is d(v) (open) or d(v)+1 (closed).
RequirementVector RandomDemands(const Graph& g, Neighborhood nbhd, Rng& rng);

}  // namespace vecdom

#endif  // VECDOM_GENERATORS_H_
