#ifndef VECDOM_VARIANTS_H_
#define VECDOM_VARIANTS_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vecdom/graph.h"
#include "vecdom/rational.h"

namespace vecdom {

// Per-vertex non-negative demands k_v.
using RequirementVector = std::vector<int>;

enum class Neighborhood { kOpen, kClosed };
enum class Scope { kTotal, kPartial };
enum class Inequality { kWeak, kStrict };

struct UniformK {
  int k = 0;
};
struct PerVertex {
  RequirementVector demands;
};
// 0 < alpha <= 1.
struct Fraction {
  Rational alpha;
};
using Threshold = std::variant<UniformK, PerVertex, Fraction>;

// One row of the domination-model catalogue: four independent axes.
struct VariantSpec {
  Neighborhood neighborhood = Neighborhood::kOpen;
  Scope scope = Scope::kPartial;
  Inequality inequality = Inequality::kWeak;
  Threshold threshold = UniformK{1};

  // Strict inequality is only meaningful for fractional thresholds; alpha
  // must lie in (0, 1]; uniform k must be non-negative.
  void Validate() const;
};

// Normal form every model compiles to: for every v in scope,
//   |S ∩ N_v| >= demands[v]
// where N_v is N(v) or N[v], and the scope is all of V (total) or V \ S
// (partial).
struct Instance {
  Graph graph;
  Neighborhood neighborhood = Neighborhood::kOpen;
  Scope scope = Scope::kPartial;
  RequirementVector demands;

  int n() const { return graph.n(); }
};

// Throws kAlphaOutOfRange, kInvalidVariant, kSizeMismatch, kNegativeDemand.
Instance Compile(const Graph& g, const VariantSpec& spec);

// Smallest integer k with (count >= k) <=> (count >= alpha * size) in the weak
// case, or (count > alpha * size) in the strict case.
int FractionDemand(const Rational& alpha, int neighborhood_size,
                   Inequality inequality);

struct VariantParams {
  std::optional<Rational> alpha;
  std::optional<int> k;
  std::optional<RequirementVector> demands;
};

// Catalogue lookup. Names are case-insensitive; spaces and underscores are
// treated as hyphens, so "partial monopoly" == "partial-monopoly".
// Short aliases: "vector", "total", "multiple".
// Throws kUnknownVariant, kMissingParam.
VariantSpec NamedVariant(std::string_view name, const VariantParams& params);

// Canonical names of every catalogue row.
std::vector<std::string> VariantNames();

// k_v = d(v): the literal vertex-cover row, as an explicit demand vector.
RequirementVector VertexCoverDemands(const Graph& g);

struct Diagnostic {
  enum class Kind { kForcedVertex, kLocallyInfeasible };
  Vertex vertex = 0;
  Kind kind = Kind::kForcedVertex;
  int demand = 0;
  int limit = 0;  // largest demand inside the definitional range
};

// Flags demands above the definitional range: d(v) under partial scope
// (the vertex must then be in S), d(v) or d(v)+1 under total scope (no set
// can satisfy it).
std::vector<Diagnostic> ValidateInstance(const Instance& inst);

// Partial closed instances coincide with partial open ones, since v ∉ S
// implies N[v] ∩ S = N(v) ∩ S. Throws kWrongVariant for total scope.
Instance AsPartialOpen(const Instance& inst);

std::string_view ToString(Neighborhood n);
std::string_view ToString(Scope s);

}  // namespace vecdom

#endif  // VECDOM_VARIANTS_H_
