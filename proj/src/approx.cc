#include "vecdom/approx.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

#include "vecdom/error.h"

namespace vecdom {
namespace {

// Max-heap key: larger score first, then smaller index.
struct Candidate {
  int64_t score;
  int index;

  bool operator<(const Candidate& other) const {
    if (score != other.score) return score < other.score;
    return index > other.index;
  }
};

// Lazy greedy over a monotone submodular gain. Stored scores are upper
// bounds on current gains, so a popped candidate whose refreshed score still
// beats the heap top (under the same order) is the exact argmax.
template <typename GainFn, typename TakeFn, typename DoneFn>
void LazyGreedy(int candidates, GainFn gain, TakeFn take, DoneFn done) {
  std::priority_queue<Candidate> heap;
  for (int i = 0; i < candidates; ++i) {
    const int64_t score = gain(i);
    if (score > 0) heap.push({score, i});
  }
  while (!done()) {
    if (heap.empty()) {
      throw Error(ErrorCode::kInfeasible, "greedy ran out of candidates");
    }
    Candidate top = heap.top();
    heap.pop();
    const int64_t fresh = gain(top.index);
    if (fresh <= 0) continue;
    Candidate refreshed{fresh, top.index};
    if (heap.empty() || !(refreshed < heap.top())) {
      take(top.index, fresh);
    } else {
      heap.push(refreshed);
    }
  }
}

Solution FromMulticover(const Instance& inst, double bound,
                        const char* path) {
  const MulticoverInstance mc =
      NeighborhoodMulticover(inst.graph, inst.neighborhood, inst.demands);
  Solution solution;
  solution.vertices = GreedyMulticover(mc);
  std::sort(solution.vertices.begin(), solution.vertices.end());
  solution.status = Solution::Status::kFeasible;
  solution.quality = Solution::Quality::kApproxWithBound;
  solution.bound = bound;
  solution.solver_path = path;
  return solution;
}

}  // namespace

MulticoverInstance NeighborhoodMulticover(const Graph& g,
                                          Neighborhood neighborhood,
                                          const RequirementVector& demands) {
  MulticoverInstance mc;
  mc.universe_size = g.n();
  mc.req = demands;
  mc.family.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    auto& set = mc.family[v];
    set.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    if (neighborhood == Neighborhood::kClosed) {
      set.insert(std::lower_bound(set.begin(), set.end(), v), v);
    }
  }
  return mc;
}

std::vector<int> GreedyMulticover(const MulticoverInstance& mc) {
  std::vector<int> membership(mc.universe_size, 0);
  for (const auto& set : mc.family) {
    for (int u : set) ++membership[u];
  }
  std::vector<int> remaining = mc.req;
  int64_t outstanding = 0;
  for (int u = 0; u < mc.universe_size; ++u) {
    if (remaining[u] > membership[u]) {
      throw Error(ErrorCode::kInfeasible,
                  "element " + std::to_string(u) + " requires " +
                      std::to_string(remaining[u]) + " sets but lies in " +
                      std::to_string(membership[u]));
    }
    outstanding += remaining[u];
  }

  std::vector<char> chosen(mc.family.size(), 0);
  std::vector<int> selected;
  auto gain = [&](int i) -> int64_t {
    if (chosen[i]) return 0;
    int64_t score = 0;
    for (int u : mc.family[i]) score += remaining[u] > 0 ? 1 : 0;
    return score;
  };
  auto take = [&](int i, int64_t score) {
    chosen[i] = 1;
    selected.push_back(i);
    for (int u : mc.family[i]) {
      if (remaining[u] > 0) --remaining[u];
    }
    outstanding -= score;
  };
  LazyGreedy(static_cast<int>(mc.family.size()), gain, take,
             [&] { return outstanding == 0; });
  return selected;
}

double LogBound(double x) { return x <= 1.0 ? 1.0 : std::log(x) + 1.0; }

Solution GreedyTotalVector(const Instance& inst) {
  if (inst.scope != Scope::kTotal || inst.neighborhood != Neighborhood::kOpen) {
    throw Error(ErrorCode::kWrongVariant, "expected a total open instance");
  }
  return FromMulticover(inst, LogBound(inst.graph.max_degree()),
                        "greedy-total-vector");
}

Solution GreedyMultipleDomination(const Instance& inst) {
  if (inst.scope != Scope::kTotal ||
      inst.neighborhood != Neighborhood::kClosed) {
    throw Error(ErrorCode::kWrongVariant, "expected a total closed instance");
  }
  return FromMulticover(inst, LogBound(inst.graph.max_degree() + 1.0),
                        "greedy-multiple");
}

Solution GreedyVectorDomination(
    const Instance& inst, const std::function<void(const GreedyStep&)>& trace) {
  CoverageState state(inst);
  const Graph& g = inst.graph;
  const int64_t target = FullCoverage(inst);

  int64_t max_singleton = 0;
  for (Vertex y = 0; y < g.n(); ++y) {
    max_singleton = std::max(max_singleton, state.MarginalGain(y));
  }

  for (Vertex v = 0; v < g.n(); ++v) {
    if (inst.demands[v] > g.degree(v)) state.Add(v);
  }

  auto gain = [&](int v) -> int64_t {
    return state.Contains(v) ? 0 : state.MarginalGain(v);
  };
  auto take = [&](int v, int64_t score) {
    state.Add(v);
    if (trace) trace({v, score, state.total()});
  };
  LazyGreedy(g.n(), gain, take, [&] { return state.total() == target; });

  Solution solution;
  solution.vertices = state.members();
  std::sort(solution.vertices.begin(), solution.vertices.end());
  solution.status = Solution::Status::kFeasible;
  solution.quality = Solution::Quality::kApproxWithBound;
  solution.bound = LogBound(static_cast<double>(max_singleton));
  solution.worst_case_bound = LogBound(2.0 * g.max_degree());
  solution.solver_path = "greedy-vector";
  return solution;
}

}  // namespace vecdom
