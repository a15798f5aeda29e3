#ifndef VECDOM_IO_H_
#define VECDOM_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "vecdom/feasibility.h"
#include "vecdom/graph.h"
#include "vecdom/variants.h"

namespace vecdom {

// Graph text, 1-based ids:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (m lines)
// Throws kMalformed, kCountMismatch and the Graph::Build errors.
Graph ParseGraph(std::string_view text);

// Canonical form: header then edges with u < v in ascending order.
std::string WriteGraph(const Graph& g);

// Demand text: one "<v> <k>" line per listed vertex (1-based); unlisted
// vertices get 0. "c" lines are comments.
// Throws kMalformed, kOutOfRange, kNegativeDemand, kDuplicateVertex.
RequirementVector ParseDemands(std::string_view text, const Graph& g);

// One line per vertex.
std::string WriteDemands(const RequirementVector& k);

// Instance text: the graph format plus
//   v <open|closed> <partial|total>   (optional, default open partial)
//   k <v> <demand>                    (optional per vertex, default 0)
Instance ParseInstance(std::string_view text);
std::string WriteInstance(const Instance& inst);

// Whitespace-separated 1-based vertex ids; "c" lines are comments.
// Throws kMalformed, kOutOfRange, kDuplicateVertex.
VertexSet ParseVertexSet(std::string_view text, int n);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view text);

// {size, vertices, feasible, quality, bound?, solverPath, elapsed}
// with 1-based sorted vertices and elapsed in seconds.
nlohmann::ordered_json ResultRecord(const Solution& solution, bool feasible,
                                    double elapsed_seconds);

}  // namespace vecdom

#endif  // VECDOM_IO_H_
