#ifndef VECDOM_COTREE_H_
#define VECDOM_COTREE_H_

#include <vector>

#include "vecdom/graph.h"

namespace vecdom {

// Modified cotree of a P4-free graph, stored as an arena. Nodes are laid out
// in post-order: every child index is smaller than its parent's, and the
// root is the last node.
struct CotreeNode {
  enum class Kind { kLeaf, kUnion, kJoin };

  Kind kind = Kind::kLeaf;
  Vertex vertex = -1;         // kLeaf only
  std::vector<int> children;  // kUnion: >= 2 children; kJoin: exactly 2
  VertexSet vertices;         // sorted vertex set of the induced subgraph
};

struct Cotree {
  std::vector<CotreeNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  bool empty() const { return nodes.empty(); }
};

// Recursive component / co-component decomposition. A join over p >= 3
// co-components C_1..C_p (ordered by smallest vertex) becomes the chain
// join(C_1, join(C_2, ... join(C_{p-1}, C_p))). Union nodes keep all
// components as children. Throws kNotCograph when some induced subgraph on
// >= 2 vertices is both connected and co-connected.
Cotree BuildModifiedCotree(const Graph& g);

// Rebuilds the graph encoded by the cotree on `n` vertices.
Graph ReplayCotree(const Cotree& tree, int n);

bool IsCograph(const Graph& g);

}  // namespace vecdom

#endif  // VECDOM_COTREE_H_
