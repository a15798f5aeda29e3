#include <bit>
#include <cstdint>
#include <string>

#include "vecdom/error.h"
#include "vecdom/exact.h"

namespace vecdom {

Solution BruteForceMinimum(const Instance& inst, int cap) {
  const Graph& g = inst.graph;
  const int n = g.n();
  if (n > cap || n > 62) {
    throw Error(ErrorCode::kTooLarge, "oracle cap is " + std::to_string(cap) +
                                          ", instance has " +
                                          std::to_string(n) + " vertices");
  }
  std::vector<uint64_t> hood(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) hood[v] |= uint64_t{1} << w;
    if (inst.neighborhood == Neighborhood::kClosed) hood[v] |= uint64_t{1} << v;
  }
  const bool partial = inst.scope == Scope::kPartial;
  auto feasible = [&](uint64_t set) {
    for (Vertex v = 0; v < n; ++v) {
      if (partial && (set >> v & 1)) continue;
      if (std::popcount(hood[v] & set) < inst.demands[v]) return false;
    }
    return true;
  };

  // Combinations of each size in lexicographic order of the sorted index
  // tuple.
  std::vector<int> idx;
  for (int size = 0; size <= n; ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      uint64_t set = 0;
      for (int i : idx) set |= uint64_t{1} << i;
      if (feasible(set)) {
        Solution solution;
        solution.vertices.assign(idx.begin(), idx.end());
        solution.status = Solution::Status::kFeasible;
        solution.quality = Solution::Quality::kOptimal;
        solution.solver_path = "oracle";
        return solution;
      }
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw Error(ErrorCode::kInfeasible, "no feasible vertex set exists");
}

}  // namespace vecdom
