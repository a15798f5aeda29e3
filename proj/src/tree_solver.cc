#include <algorithm>
#include <stdexcept>
#include <string>

#include "vecdom/error.h"
#include "vecdom/exact.h"

namespace vecdom {
namespace {

void CheckSweepInvariant(const Graph& g, const RequirementVector& k,
                         const std::vector<char>& in_set,
                         const std::vector<char>& processed) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!processed[v] || in_set[v]) continue;
    int count = 0;
    for (Vertex w : g.neighbors(v)) count += in_set[w];
    if (count < k[v]) {
      throw std::logic_error("tree sweep invariant broken at vertex " +
                             std::to_string(v));
    }
  }
}

}  // namespace

Solution SolveTreeVector(const Graph& g, const RequirementVector& k,
                         const TreeSolveOptions& options) {
  if (static_cast<int>(k.size()) != g.n()) {
    throw Error(ErrorCode::kSizeMismatch, "demand vector length mismatch");
  }
  Solution solution;
  solution.status = Solution::Status::kFeasible;
  solution.quality = Solution::Quality::kOptimal;
  solution.solver_path = "tree";
  if (g.n() == 0) return solution;

  const RootedTree tree = ReverseBfsOrder(g, options.root);
  const int n = g.n();
  // All sweep state is indexed by BFS position (root = 0). A vertex's parent
  // sits at a smaller position, and parent positions never decrease along
  // the BFS order, so the reverse sweep walks memory monotonically.
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[tree.order[n - 1 - i]] = i;
  std::vector<int> parent_pos(n, -1);
  std::vector<int> demand(n);
  for (int i = 0; i < n; ++i) {
    const Vertex v = tree.order[n - 1 - i];
    demand[i] = k[v];
    if (i > 0) parent_pos[i] = position[tree.parent[v]];
  }

  // flags: bit 0 = in S, bit 1 = processed.
  std::vector<char> flags(n, 0);
  // children_in_set[i] = |C(v_i) ∩ S|.
  std::vector<int> children_in_set(n, 0);
  auto add = [&](int i) {
    if (flags[i] & 1) return;
    flags[i] |= 1;
    if (i > 0) ++children_in_set[parent_pos[i]];
  };

  for (int i = n - 1; i >= 0; --i) {
    if (flags[i] & 2) continue;
    flags[i] |= 2;
    const int covered = children_in_set[i];
    if (i > 0) {
      if (covered <= demand[i] - 2) {
        add(i);
      } else if (covered == demand[i] - 1) {
        add(parent_pos[i]);
        flags[parent_pos[i]] |= 2;
      }
    } else if (covered < demand[i]) {
      add(i);
    }
    if (options.check_sweep_invariant) {
      std::vector<char> in_set(n), processed(n);
      for (int j = 0; j < n; ++j) {
        const Vertex v = tree.order[n - 1 - j];
        in_set[v] = flags[j] & 1;
        processed[v] = (flags[j] & 2) != 0;
      }
      CheckSweepInvariant(g, k, in_set, processed);
    }
  }

  std::vector<char> in_set(n, 0);
  for (int i = 0; i < n; ++i) {
    if (flags[i] & 1) in_set[tree.order[n - 1 - i]] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) solution.vertices.push_back(v);
  }
  return solution;
}

}  // namespace vecdom
