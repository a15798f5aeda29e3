#ifndef VECDOM_GADGETS_H_
#define VECDOM_GADGETS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vecdom/exact.h"
#include "vecdom/graph.h"
#include "vecdom/rational.h"
#include "vecdom/variants.h"

namespace vecdom {

struct GadgetParams {
  std::optional<Rational> alpha;
  int copies = 1;  // N for replicate / alpha-domination
  int blocks = 0;  // m: number of clique blocks
  int copies_per_block = 0;  // n_c
  int block_factor = 0;      // B
  int k = 0;                 // k-domination
};

// factor_lower * opt(base) + offset_lower <= opt(gadget)
//   <= factor_upper * opt(base) + offset_upper
// where opt(base) is the optimum of `base_variant` on the base graph and
// opt(gadget) the optimum of `gadget_variant` on G'.
struct SandwichClaim {
  std::string lower_expr;
  std::string middle_expr;
  std::string upper_expr;
  std::string base_variant_name;
  std::string gadget_variant_name;
  VariantSpec base_variant;
  VariantSpec gadget_variant;
  int64_t lower_factor = 1;
  int64_t lower_offset = 0;
  int64_t upper_factor = 1;
  int64_t upper_offset = 0;
};

struct GadgetOutput {
  std::string construction;
  GadgetParams params;
  Graph base;
  Graph gprime;
  // embedding[c][v] = vertex of G' holding copy c of base vertex v.
  std::vector<std::vector<Vertex>> embedding;
  // Number of attachment edges each base vertex receives (per copy).
  RequirementVector attachment_demands;
  // Vertices added on top of the copies (the set K); part of the upper-bound
  // witness.
  VertexSet extra;
  SandwichClaim claim;
};

// N disjoint copies of g; γ(G') = N·γ(G).
GadgetOutput GadgetReplicate(const Graph& g, int copies);

// g plus an edgeless set K of N·Δ(g) vertices, N = ⌈α/(1-α)⌉ unless
// overridden; vertex v gets k_v = ⌈(α d(v) - 1)/(1 - α)⌉ (0 when d(v) = 1)
// neighbors in K, assigned round-robin. γ(G) <= γ_α(G') <= γ(G) + |K|.
GadgetOutput GadgetAlphaDomination(const Graph& g, const Rational& alpha,
                                   std::optional<int> copies_override = {});

// m·n_c copies of g and a clique K of B·m·n_c vertices split into m blocks;
// copy j attaches into block ⌈j/n_c⌉ with the same k_v as above.
// m n_c γ^t(G) <= γ^t_α(G') <= m n_c γ^t(G) + B m n_c.
GadgetOutput GadgetTotalAlpha(const Graph& g, const Rational& alpha,
                              int blocks, int copies_per_block);

// As GadgetTotalAlpha with k_v = ⌈(α d(v) + α - 1)/(1 - α)⌉ and closed
// neighborhoods. m n_c γ(G) <= γ_{×α}(G') <= m n_c γ(G) + B m n_c.
GadgetOutput GadgetAlphaRate(const Graph& g, const Rational& alpha, int blocks,
                             int copies_per_block);

// join(g, K_{k-1}); γ(G) <= γ^{(k)}(G') <= γ(G) + k - 1.
GadgetOutput GadgetKDomination(const Graph& g, int k);

// K ∪ (copies of a base solution): the set each upper bound is argued with.
VertexSet UpperWitness(const GadgetOutput& out, const VertexSet& base_solution);

struct SandwichReport {
  int64_t base_optimum = 0;
  int64_t lower = 0;
  int64_t middle = 0;
  int64_t upper = 0;
  bool holds = false;
  int64_t witness_size = 0;
  bool witness_feasible = false;
};

// Computes both optima with the oracle. Throws kTooLarge beyond `cap`.
SandwichReport VerifySandwich(const GadgetOutput& out,
                              int cap = kDefaultOracleCap);

}  // namespace vecdom

#endif  // VECDOM_GADGETS_H_
