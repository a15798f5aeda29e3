#ifndef VECDOM_GRAPH_H_
#define VECDOM_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vecdom {

using Vertex = int32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

// Immutable undirected simple graph on vertices 0..n-1. Neighbor lists are
// sorted ascending and stored back to back (CSR layout).
class Graph {
 public:
  Graph() = default;

  // Validates endpoints, self-loops and duplicates (in either orientation).
  static Graph Build(int n, std::span<const Edge> edges);
  // Trusted constructor: adjacency must already be symmetric, sorted and
  // loop-free. Used by internal constructions.
  static Graph FromSortedAdjacency(std::vector<std::vector<Vertex>> adjacency);

  int n() const { return static_cast<int>(offsets_.size()) - 1; }
  int64_t m() const { return static_cast<int64_t>(targets_.size()) / 2; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  int max_degree() const { return max_degree_; }
  bool HasEdge(Vertex u, Vertex v) const;
  bool IsComplete() const;
  bool IsConnected() const;

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> Edges() const;

  // Subgraph induced by `vertices` (any order); vertex i of the result is
  // vertices[i].
  Graph InducedSubgraph(std::span<const Vertex> vertices) const;
  Graph WithoutEdge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  explicit Graph(const std::vector<std::vector<Vertex>>& adjacency);

  // neighbors(v) = targets_[offsets_[v] .. offsets_[v+1]).
  std::vector<int64_t> offsets_ = {0};
  std::vector<Vertex> targets_;
  int max_degree_ = 0;
};

// Common small graphs.
Graph CompleteGraph(int n);
Graph EmptyGraph(int n);
Graph PathGraph(int n);
Graph CycleGraph(int n);
// Vertex 0 is the center.
Graph StarGraph(int leaves);

struct DisjointUnionResult {
  Graph graph;
  // offsets[i] is the id of vertex 0 of gs[i] in `graph`; vertex v of gs[i]
  // maps to offsets[i] + v.
  std::vector<Vertex> offsets;
  // Inverse map: for every vertex of `graph`, its (part, local id).
  std::vector<std::pair<int, Vertex>> origin;
};

DisjointUnionResult DisjointUnion(std::span<const Graph> gs);

// Disjoint union of g1 and g2 plus every edge between them. Vertices of g2
// are shifted by g1.n().
Graph Join(const Graph& g1, const Graph& g2);

struct RootedTree {
  Vertex root = 0;
  // Vertices in reverse breadth-first order; the root is last.
  std::vector<Vertex> order;
  // parent[root] == -1.
  std::vector<Vertex> parent;
};

// Throws kNotATree for cycles or disconnected graphs.
RootedTree ReverseBfsOrder(const Graph& g, Vertex root);

// Connected components of the subgraph induced by `vertices`, each sorted,
// ordered by smallest member.
std::vector<VertexSet> ComponentsOf(const Graph& g,
                                    std::span<const Vertex> vertices);
// Components of the complement of the induced subgraph (co-components).
std::vector<VertexSet> CoComponentsOf(const Graph& g,
                                      std::span<const Vertex> vertices);

}  // namespace vecdom

#endif  // VECDOM_GRAPH_H_
