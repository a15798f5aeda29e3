#include "vecdom/generators.h"

#include <algorithm>
#include <numeric>
#include <queue>

#include "vecdom/error.h"

namespace vecdom {

Graph RandomTree(int n, Rng& rng) {
  if (n <= 0) return EmptyGraph(0);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<std::vector<Vertex>> adjacency(n);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const Vertex u = label[i];
    const Vertex v = label[pick(rng)];
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  return Graph::FromSortedAdjacency(std::move(adjacency));
}

Graph RandomCograph(int n, Rng& rng) {
  if (n <= 0) return EmptyGraph(0);
  std::vector<std::vector<Vertex>> parts(n);
  for (int v = 0; v < n; ++v) parts[v] = {v};
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(0.5);
  while (parts.size() > 1) {
    std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
    size_t a = pick(rng);
    size_t b = pick(rng);
    while (b == a) b = pick(rng);
    if (coin(rng)) {
      for (Vertex u : parts[a]) {
        for (Vertex v : parts[b]) edges.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
    parts[a].insert(parts[a].end(), parts[b].begin(), parts[b].end());
    parts[b] = std::move(parts.back());
    parts.pop_back();
  }
  return Graph::Build(n, edges);
}

Graph RandomThreshold(int n, Rng& rng) {
  if (n <= 0) return EmptyGraph(0);
  std::vector<std::vector<Vertex>> adjacency(n);
  std::bernoulli_distribution coin(0.5);
  for (Vertex v = 1; v < n; ++v) {
    if (!coin(rng)) continue;
    for (Vertex u = 0; u < v; ++u) {
      adjacency[u].push_back(v);
      adjacency[v].push_back(u);
    }
  }
  return Graph::FromSortedAdjacency(std::move(adjacency));
}

Graph RandomGnp(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::Build(n, edges);
}

Graph TreeFromPruefer(int n, const std::vector<int>& code) {
  if (n < 2 || static_cast<int>(code.size()) != n - 2) {
    throw Error(ErrorCode::kSizeMismatch, "Pruefer code must have length n-2");
  }
  std::vector<int> degree(n, 1);
  for (int x : code) {
    if (x < 0 || x >= n) throw Error(ErrorCode::kOutOfRange, "Pruefer entry");
    ++degree[x];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int x : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[x] == 1) leaves.push(x);
  }
  const int u = leaves.top();
  leaves.pop();
  const int v = leaves.top();
  edges.emplace_back(std::min(u, v), std::max(u, v));
  return Graph::Build(n, edges);
}

RequirementVector RandomDemands(const Graph& g, Neighborhood nbhd, Rng& rng) {
  RequirementVector k(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const int limit = g.degree(v) + (nbhd == Neighborhood::kClosed ? 1 : 0);
    k[v] = std::uniform_int_distribution<int>(0, limit)(rng);
  }
  return k;
}

}  // namespace vecdom
