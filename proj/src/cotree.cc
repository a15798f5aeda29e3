#include "vecdom/cotree.h"

#include <algorithm>
#include <iterator>

#include "vecdom/error.h"

namespace vecdom {
namespace {

class CotreeBuilder {
 public:
  explicit CotreeBuilder(const Graph& g) : g_(g) {}

  Cotree Run() {
    VertexSet all(g_.n());
    for (Vertex v = 0; v < g_.n(); ++v) all[v] = v;
    if (!all.empty()) Decompose(all);
    return std::move(tree_);
  }

 private:
  int Emit(CotreeNode node) {
    tree_.nodes.push_back(std::move(node));
    return static_cast<int>(tree_.nodes.size()) - 1;
  }

  int Decompose(const VertexSet& vertices) {
    if (vertices.size() == 1) {
      CotreeNode leaf;
      leaf.kind = CotreeNode::Kind::kLeaf;
      leaf.vertex = vertices.front();
      leaf.vertices = vertices;
      return Emit(std::move(leaf));
    }
    std::vector<VertexSet> components = ComponentsOf(g_, vertices);
    if (components.size() > 1) {
      CotreeNode node;
      node.kind = CotreeNode::Kind::kUnion;
      for (const VertexSet& component : components) {
        node.children.push_back(Decompose(component));
      }
      node.vertices = vertices;
      return Emit(std::move(node));
    }
    std::vector<VertexSet> co_components = CoComponentsOf(g_, vertices);
    if (co_components.size() < 2) {
      throw Error(ErrorCode::kNotCograph,
                  "induced subgraph on " + std::to_string(vertices.size()) +
                      " vertices is connected and co-connected");
    }
    return JoinChain(co_components, 0);
  }

  // Node for F_i = C_i + ... + C_p.
  int JoinChain(const std::vector<VertexSet>& co_components, size_t i) {
    if (i + 1 == co_components.size()) return Decompose(co_components[i]);
    const int left = Decompose(co_components[i]);
    const int right = JoinChain(co_components, i + 1);
    CotreeNode node;
    node.kind = CotreeNode::Kind::kJoin;
    node.children = {left, right};
    std::merge(tree_.nodes[left].vertices.begin(),
               tree_.nodes[left].vertices.end(),
               tree_.nodes[right].vertices.begin(),
               tree_.nodes[right].vertices.end(),
               std::back_inserter(node.vertices));
    return Emit(std::move(node));
  }

  const Graph& g_;
  Cotree tree_;
};

}  // namespace

Cotree BuildModifiedCotree(const Graph& g) { return CotreeBuilder(g).Run(); }

Graph ReplayCotree(const Cotree& tree, int n) {
  std::vector<Edge> edges;
  for (const CotreeNode& node : tree.nodes) {
    if (node.kind != CotreeNode::Kind::kJoin) continue;
    for (Vertex u : tree.nodes[node.children[0]].vertices) {
      for (Vertex v : tree.nodes[node.children[1]].vertices) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph::Build(n, edges);
}

bool IsCograph(const Graph& g) {
  try {
    BuildModifiedCotree(g);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotCograph) throw;
    return false;
  }
}

}  // namespace vecdom
