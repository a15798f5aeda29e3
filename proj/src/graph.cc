#include "vecdom/graph.h"

#include <algorithm>
#include <deque>
#include <string>

#include "vecdom/error.h"

namespace vecdom {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNotCograph: return "NotCograph";
    case ErrorCode::kNotThreshold: return "NotThreshold";
    case ErrorCode::kNotComplete: return "NotComplete";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kUnknownVariant: return "UnknownVariant";
    case ErrorCode::kMissingParam: return "MissingParam";
    case ErrorCode::kInvalidVariant: return "InvalidVariant";
    case ErrorCode::kWrongVariant: return "WrongVariant";
    case ErrorCode::kAlreadyInSet: return "AlreadyInSet";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kIsolatedVertex: return "IsolatedVertex";
    case ErrorCode::kBlockTooSmall: return "BlockTooSmall";
    case ErrorCode::kFeasibilityConditionViolated:
      return "FeasibilityConditionViolated";
    case ErrorCode::kMalformed: return "Malformed";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kNegativeDemand: return "NegativeDemand";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
  }
  return "Unknown";
}

Graph::Graph(const std::vector<std::vector<Vertex>>& adjacency) {
  offsets_.resize(adjacency.size() + 1);
  int64_t degree_sum = 0;
  for (size_t v = 0; v < adjacency.size(); ++v) {
    degree_sum += static_cast<int64_t>(adjacency[v].size());
    offsets_[v + 1] = degree_sum;
    max_degree_ = std::max(max_degree_, static_cast<int>(adjacency[v].size()));
  }
  targets_.reserve(degree_sum);
  for (const auto& list : adjacency) {
    targets_.insert(targets_.end(), list.begin(), list.end());
  }
}

Graph Graph::Build(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::kOutOfRange, "negative vertex count");
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "edge endpoint out of range: (" + std::to_string(u) + "," +
                      std::to_string(v) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(u));
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge (" + std::to_string(v) + "," +
                      std::to_string(*dup) + ")");
    }
  }
  return Graph(adjacency);
}

Graph Graph::FromSortedAdjacency(std::vector<std::vector<Vertex>> adjacency) {
  return Graph(adjacency);
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::IsComplete() const {
  const int64_t nn = n();
  return m() == nn * (nn - 1) / 2;
}

bool Graph::IsConnected() const {
  if (n() == 0) return true;
  std::vector<Vertex> all(n());
  for (Vertex v = 0; v < n(); ++v) all[v] = v;
  return ComponentsOf(*this, all).size() == 1;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(m());
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Graph Graph::InducedSubgraph(std::span<const Vertex> vertices) const {
  std::vector<Vertex> local(n(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  std::vector<std::vector<Vertex>> adjacency(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : neighbors(vertices[i])) {
      if (local[w] >= 0) adjacency[i].push_back(local[w]);
    }
    std::sort(adjacency[i].begin(), adjacency[i].end());
  }
  return Graph(adjacency);
}

Graph Graph::WithoutEdge(Vertex u, Vertex v) const {
  if (!HasEdge(u, v)) {
    throw Error(ErrorCode::kOutOfRange, "no such edge");
  }
  std::vector<std::vector<Vertex>> adjacency(n());
  for (Vertex x = 0; x < n(); ++x) {
    for (Vertex y : neighbors(x)) {
      if ((x == u && y == v) || (x == v && y == u)) continue;
      adjacency[x].push_back(y);
    }
  }
  return Graph(adjacency);
}

Graph CompleteGraph(int n) {
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      if (w != v) adjacency[v].push_back(w);
    }
  }
  return Graph::FromSortedAdjacency(std::move(adjacency));
}

Graph EmptyGraph(int n) {
  return Graph::FromSortedAdjacency(std::vector<std::vector<Vertex>>(n));
}

Graph PathGraph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::Build(n, edges);
}

Graph CycleGraph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::Build(n, edges);
}

Graph StarGraph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::Build(leaves + 1, edges);
}

DisjointUnionResult DisjointUnion(std::span<const Graph> gs) {
  DisjointUnionResult result;
  std::vector<std::vector<Vertex>> adjacency;
  for (size_t part = 0; part < gs.size(); ++part) {
    const Graph& g = gs[part];
    const Vertex offset = static_cast<Vertex>(adjacency.size());
    result.offsets.push_back(offset);
    for (Vertex v = 0; v < g.n(); ++v) {
      std::vector<Vertex> list;
      list.reserve(g.degree(v));
      for (Vertex w : g.neighbors(v)) list.push_back(w + offset);
      adjacency.push_back(std::move(list));
      result.origin.emplace_back(static_cast<int>(part), v);
    }
  }
  result.graph = Graph::FromSortedAdjacency(std::move(adjacency));
  return result;
}

Graph Join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.n();
  const int n2 = g2.n();
  std::vector<std::vector<Vertex>> adjacency(n1 + n2);
  for (Vertex v = 0; v < n1; ++v) {
    auto& list = adjacency[v];
    list.assign(g1.neighbors(v).begin(), g1.neighbors(v).end());
    for (Vertex w = 0; w < n2; ++w) list.push_back(n1 + w);
  }
  for (Vertex v = 0; v < n2; ++v) {
    auto& list = adjacency[n1 + v];
    for (Vertex w = 0; w < n1; ++w) list.push_back(w);
    for (Vertex w : g2.neighbors(v)) list.push_back(n1 + w);
  }
  return Graph::FromSortedAdjacency(std::move(adjacency));
}

RootedTree ReverseBfsOrder(const Graph& g, Vertex root) {
  const int n = g.n();
  if (root < 0 || root >= n) {
    throw Error(ErrorCode::kOutOfRange, "root out of range");
  }
  if (g.m() != n - 1) {
    throw Error(ErrorCode::kNotATree,
                "a tree on " + std::to_string(n) + " vertices has " +
                    std::to_string(n - 1) + " edges, got " +
                    std::to_string(g.m()));
  }
  RootedTree tree;
  tree.root = root;
  tree.parent.assign(n, -1);
  std::vector<Vertex>& bfs = tree.order;
  bfs.reserve(n);
  bfs.push_back(root);
  for (size_t head = 0; head < bfs.size(); ++head) {
    const Vertex v = bfs[head];
    for (Vertex w : g.neighbors(v)) {
      if (w != root && tree.parent[w] < 0) {
        tree.parent[w] = v;
        bfs.push_back(w);
      }
    }
  }
  // n - 1 edges and connected implies acyclic.
  if (static_cast<int>(bfs.size()) != n) {
    throw Error(ErrorCode::kNotATree, "graph is not connected");
  }
  std::reverse(bfs.begin(), bfs.end());
  return tree;
}

std::vector<VertexSet> ComponentsOf(const Graph& g,
                                    std::span<const Vertex> vertices) {
  std::vector<char> state(g.n(), 0);  // 0 = outside, 1 = unvisited, 2 = seen
  for (Vertex v : vertices) state[v] = 1;
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex start : sorted) {
    if (state[start] != 1) continue;
    VertexSet component;
    state[start] = 2;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (state[w] == 1) {
          state[w] = 2;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::vector<VertexSet> CoComponentsOf(const Graph& g,
                                      std::span<const Vertex> vertices) {
  // Complement BFS over an explicit list of unvisited vertices; each
  // expansion scans the remaining list once, so the cost is O(|W|^2).
  std::vector<Vertex> unvisited(vertices.begin(), vertices.end());
  std::sort(unvisited.begin(), unvisited.end());
  std::vector<char> adjacent(g.n(), 0);
  std::vector<VertexSet> components;
  while (!unvisited.empty()) {
    VertexSet component{unvisited.front()};
    unvisited.erase(unvisited.begin());
    for (size_t head = 0; head < component.size(); ++head) {
      const Vertex v = component[head];
      for (Vertex w : g.neighbors(v)) adjacent[w] = 1;
      std::vector<Vertex> still;
      for (Vertex w : unvisited) {
        if (adjacent[w]) {
          still.push_back(w);
        } else {
          component.push_back(w);
        }
      }
      for (Vertex w : g.neighbors(v)) adjacent[w] = 0;
      unvisited = std::move(still);
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

}  // namespace vecdom
