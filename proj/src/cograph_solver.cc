#include <algorithm>
#include <iterator>
#include <limits>
#include <optional>
#include <string>

#include "vecdom/cotree.h"
#include "vecdom/error.h"
#include "vecdom/exact.h"

namespace vecdom {
namespace {

// D(H, r) for one cotree node and every residual r in 0..Δ; nullopt is the
// infeasible marker of the total variant.
using Entry = std::optional<VertexSet>;
using Row = std::vector<Entry>;

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int SizeOf(const Entry& e) {
  return e ? static_cast<int>(e->size()) : kInf;
}

Entry UnionOf(const Entry& a, const Entry& b) {
  if (!a || !b) return std::nullopt;
  VertexSet out;
  out.reserve(a->size() + b->size());
  std::merge(a->begin(), a->end(), b->begin(), b->end(),
             std::back_inserter(out));
  return out;
}

// Adds the `count` smallest vertices of `pool` that are not in `base`.
VertexSet Pad(const VertexSet& base, const VertexSet& pool, int count) {
  VertexSet out = base;
  for (Vertex v : pool) {
    if (count <= 0) break;
    if (!std::binary_search(base.begin(), base.end(), v)) {
      out.push_back(v);
      --count;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

class CographDp {
 public:
  CographDp(const Graph& g, const RequirementVector& k, bool total)
      : g_(g), k_(k), total_(total), delta_(g.max_degree()) {}

  Entry Run(const Cotree& tree) {
    if (g_.n() == 0) return VertexSet{};
    std::vector<Row> table(tree.nodes.size());
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
      const CotreeNode& node = tree.nodes[i];
      switch (node.kind) {
        case CotreeNode::Kind::kLeaf:
          table[i] = Leaf(node.vertex);
          break;
        case CotreeNode::Kind::kUnion:
          table[i] = table[node.children[0]];
          for (size_t c = 1; c < node.children.size(); ++c) {
            for (int r = 0; r <= delta_; ++r) {
              table[i][r] = UnionOf(table[i][r], table[node.children[c]][r]);
            }
          }
          break;
        case CotreeNode::Kind::kJoin:
          table[i] = JoinRow(tree.nodes[node.children[0]],
                             table[node.children[0]],
                             tree.nodes[node.children[1]],
                             table[node.children[1]]);
          break;
      }
      // Children rows are no longer needed.
      for (int c : node.children) Row().swap(table[c]);
    }
    return table[tree.root()][0];
  }

 private:
  Row Leaf(Vertex v) const {
    Row row(delta_ + 1);
    for (int r = 0; r <= delta_; ++r) {
      if (k_[v] <= r) {
        row[r] = VertexSet{};
      } else if (!total_) {
        row[r] = VertexSet{v};
      }
    }
    return row;
  }

  // First child is the co-component C, second the remainder H2 = H - C.
  Row JoinRow(const CotreeNode& c_node, const Row& c_row,
              const CotreeNode& h2_node, const Row& h2_row) const {
    const int c_size = static_cast<int>(c_node.vertices.size());
    const int h2_size = static_cast<int>(h2_node.vertices.size());
    Row row(delta_ + 1);
    for (int r = 0; r <= delta_; ++r) {
      // i = vertices taken from H2 (residual for C), j = taken from C.
      int best = kInf;
      int best_i = -1;
      int best_j = -1;
      for (int i = 0; i <= h2_size; ++i) {
        const int di = SizeOf(c_row[std::min(r + i, delta_)]);
        if (di >= kInf) continue;
        for (int j = 0; j <= c_size; ++j) {
          const int dj = SizeOf(h2_row[std::min(r + j, delta_)]);
          if (dj >= kInf) continue;
          const int value = std::max(di, j) + std::max(dj, i);
          if (value < best) {
            best = value;
            best_i = i;
            best_j = j;
          }
        }
      }
      if (best_i < 0) continue;  // Inf
      const VertexSet& d1 = *c_row[std::min(r + best_i, delta_)];
      const VertexSet& d2 = *h2_row[std::min(r + best_j, delta_)];
      const VertexSet hat1 =
          Pad(d1, c_node.vertices, best_j - static_cast<int>(d1.size()));
      const VertexSet hat2 =
          Pad(d2, h2_node.vertices, best_i - static_cast<int>(d2.size()));
      row[r] = UnionOf(hat1, hat2);
    }
    return row;
  }

  const Graph& g_;
  const RequirementVector& k_;
  const bool total_;
  const int delta_;
};

}  // namespace

Solution SolveCograph(const Instance& inst) {
  if (inst.neighborhood != Neighborhood::kOpen) {
    throw Error(ErrorCode::kWrongVariant,
                "cotree solver handles open neighborhoods only");
  }
  const Graph& g = inst.graph;
  const auto& k = inst.demands;
  const bool total = inst.scope == Scope::kTotal;
  Solution solution;
  solution.quality = Solution::Quality::kOptimal;
  solution.solver_path = "cograph";
  const Cotree tree = BuildModifiedCotree(g);

  if (total) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (k[v] > g.degree(v)) {
        throw Error(ErrorCode::kInfeasible,
                    "vertex " + std::to_string(v) + " demands " +
                        std::to_string(k[v]) + " > degree " +
                        std::to_string(g.degree(v)));
      }
    }
    Entry result = CographDp(g, k, true).Run(tree);
    if (!result) {
      throw Error(ErrorCode::kInfeasible, "no total vector dominating set");
    }
    solution.vertices = std::move(*result);
    solution.status = Solution::Status::kFeasible;
    return solution;
  }

  // R: vertices whose demand exceeds their degree belong to every solution.
  std::vector<char> forced(g.n(), 0);
  VertexSet rest;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (k[v] > g.degree(v)) {
      forced[v] = 1;
    } else {
      rest.push_back(v);
    }
  }
  const Graph reduced = g.InducedSubgraph(rest);
  RequirementVector reduced_k(rest.size());
  for (size_t i = 0; i < rest.size(); ++i) {
    int in_forced = 0;
    for (Vertex w : g.neighbors(rest[i])) in_forced += forced[w];
    reduced_k[i] = std::max(k[rest[i]] - in_forced, 0);
  }
  Entry result =
      CographDp(reduced, reduced_k, false).Run(BuildModifiedCotree(reduced));
  for (Vertex v : *result) solution.vertices.push_back(rest[v]);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (forced[v]) solution.vertices.push_back(v);
  }
  std::sort(solution.vertices.begin(), solution.vertices.end());
  solution.status = Solution::Status::kFeasible;
  return solution;
}

}  // namespace vecdom
