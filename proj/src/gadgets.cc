#include "vecdom/gadgets.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "vecdom/error.h"
#include "vecdom/feasibility.h"

namespace vecdom {
namespace {

void RequireProperAlpha(const Rational& alpha) {
  if (alpha <= Rational(0) || alpha >= Rational(1)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "gadget alpha must lie in (0, 1), got " + alpha.ToString());
  }
}

void RequireNoIsolated(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      throw Error(ErrorCode::kIsolatedVertex,
                  "base vertex " + std::to_string(v) + " is isolated");
    }
  }
}

int CeilAlphaRatio(const Rational& alpha) {
  return static_cast<int>((alpha / (Rational(1) - alpha)).Ceil());
}

// k_v with k/(d+k) < α <= (k+1)/(d+k).
int OpenAttachment(const Rational& alpha, int d) {
  if (d == 1) return 0;
  return static_cast<int>(
      ((alpha * Rational(d) - Rational(1)) / (Rational(1) - alpha)).Ceil());
}

// k_v with k/(d+k+1) < α <= (k+1)/(d+k+1).
int ClosedAttachment(const Rational& alpha, int d) {
  return static_cast<int>(
      ((alpha * Rational(d) + alpha - Rational(1)) / (Rational(1) - alpha))
          .Ceil());
}

void CheckAttachmentInequality(const Rational& alpha, int d, int k,
                               bool closed) {
  const int size = d + k + (closed ? 1 : 0);
  const bool ok =
      Rational(k, size) < alpha && alpha <= Rational(k + 1, size);
  if (!ok) {
    throw std::logic_error("attachment inequality fails for d=" +
                           std::to_string(d) + ", k=" + std::to_string(k));
  }
}

VariantSpec Spec(std::string_view name, std::optional<Rational> alpha = {},
                 std::optional<int> k = {}) {
  VariantParams params;
  params.alpha = alpha;
  params.k = k;
  return NamedVariant(name, params);
}

// Mutable adjacency builder for the constructions below.
class Builder {
 public:
  explicit Builder(int n) : adjacency_(n) {}

  void AddEdge(Vertex u, Vertex v) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  void AddCopy(const Graph& g, Vertex offset) {
    for (const auto& [u, v] : g.Edges()) AddEdge(offset + u, offset + v);
  }
  void AddClique(Vertex first, int size) {
    for (Vertex u = first; u < first + size; ++u) {
      for (Vertex v = u + 1; v < first + size; ++v) AddEdge(u, v);
    }
  }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  Graph Finish() {
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    return Graph::FromSortedAdjacency(std::move(adjacency_));
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

// Round-robin assignment of `count` distinct targets from [first, first+size)
// starting at `cursor`.
void Attach(Builder& builder, Vertex v, int count, Vertex first, int size,
            int& cursor) {
  for (int t = 0; t < count; ++t) {
    builder.AddEdge(v, first + cursor);
    cursor = (cursor + 1) % size;
  }
}

// Shared shape of the clique-block gadgets.
GadgetOutput CliqueBlockGadget(const Graph& g, const Rational& alpha,
                               int blocks, int copies_per_block, bool closed) {
  RequireProperAlpha(alpha);
  RequireNoIsolated(g);
  if (blocks < 1 || copies_per_block < 1) {
    throw Error(ErrorCode::kOutOfRange, "m and n_c must be positive");
  }
  const int b = CeilAlphaRatio(alpha);
  const int block_size = b * copies_per_block;
  // Clique-side condition m >= c·α·n_c/((1-α)B), c = 2 (total) or 1 (rate).
  const Rational needed = Rational(closed ? 1 : 2) * alpha *
                          Rational(copies_per_block) /
                          ((Rational(1) - alpha) * Rational(b));
  if (Rational(blocks) < needed) {
    throw Error(ErrorCode::kFeasibilityConditionViolated,
                "need m >= " + needed.ToString() + ", got m = " +
                    std::to_string(blocks));
  }

  GadgetOutput out;
  out.base = g;
  out.params.alpha = alpha;
  out.params.blocks = blocks;
  out.params.copies_per_block = copies_per_block;
  out.params.block_factor = b;
  out.attachment_demands.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const int d = g.degree(v);
    const int k = closed ? ClosedAttachment(alpha, d) : OpenAttachment(alpha, d);
    CheckAttachmentInequality(alpha, d, k, closed);
    if (k > block_size) {
      throw Error(ErrorCode::kBlockTooSmall,
                  "vertex " + std::to_string(v) + " needs " +
                      std::to_string(k) + " attachments, blocks hold " +
                      std::to_string(block_size));
    }
    out.attachment_demands[v] = k;
  }

  const int copies = blocks * copies_per_block;
  const Vertex clique_first = copies * g.n();
  const int clique_size = b * copies;
  Builder builder(clique_first + clique_size);
  builder.AddClique(clique_first, clique_size);
  std::vector<int> cursor(blocks, 0);
  for (int j = 0; j < copies; ++j) {
    const Vertex offset = j * g.n();
    builder.AddCopy(g, offset);
    const int block = j / copies_per_block;
    const Vertex block_first = clique_first + block * block_size;
    std::vector<Vertex> map(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
      map[v] = offset + v;
      Attach(builder, offset + v, out.attachment_demands[v], block_first,
             block_size, cursor[block]);
    }
    out.embedding.push_back(std::move(map));
  }
  // Exact clique-side check on the built graph: with K in the witness, each
  // clique vertex c has at least |K| - 1 (open) or |K| (closed) members of
  // S' among its |K| - 1 + a(c) neighbors.
  for (Vertex c = clique_first; c < clique_first + clique_size; ++c) {
    const int attached = builder.degree(c) - (clique_size - 1);
    const Rational have(closed ? clique_size : clique_size - 1);
    if ((Rational(1) - alpha) * have < alpha * Rational(attached)) {
      throw Error(ErrorCode::kFeasibilityConditionViolated,
                  "clique vertex " + std::to_string(c) + " has " +
                      std::to_string(attached) +
                      " attachments; increase m or B");
    }
  }
  out.gprime = builder.Finish();
  for (Vertex c = clique_first; c < clique_first + clique_size; ++c) {
    out.extra.push_back(c);
  }

  const std::string mn = std::to_string(copies);
  const std::string bmn = std::to_string(clique_size);
  SandwichClaim& claim = out.claim;
  claim.base_variant_name = closed ? "domination" : "total-domination";
  claim.gadget_variant_name =
      closed ? "alpha-rate-domination" : "total-alpha-domination";
  claim.base_variant = Spec(claim.base_variant_name);
  claim.gadget_variant = Spec(claim.gadget_variant_name, alpha);
  const std::string base_gamma = closed ? "gamma(G)" : "gamma_t(G)";
  claim.lower_expr = mn + "*" + base_gamma;
  claim.middle_expr = closed ? "gamma_xalpha(G')" : "gamma_t_alpha(G')";
  claim.upper_expr = mn + "*" + base_gamma + " + " + bmn;
  claim.lower_factor = copies;
  claim.upper_factor = copies;
  claim.upper_offset = clique_size;
  return out;
}

}  // namespace

GadgetOutput GadgetReplicate(const Graph& g, int copies) {
  if (copies < 1) throw Error(ErrorCode::kOutOfRange, "N must be >= 1");
  std::vector<Graph> parts(copies, g);
  DisjointUnionResult u = DisjointUnion(parts);
  GadgetOutput out;
  out.construction = "replicate";
  out.params.copies = copies;
  out.base = g;
  out.gprime = std::move(u.graph);
  for (int c = 0; c < copies; ++c) {
    std::vector<Vertex> map(g.n());
    for (Vertex v = 0; v < g.n(); ++v) map[v] = u.offsets[c] + v;
    out.embedding.push_back(std::move(map));
  }
  out.attachment_demands.assign(g.n(), 0);
  SandwichClaim& claim = out.claim;
  claim.base_variant_name = "domination";
  claim.gadget_variant_name = "domination";
  claim.base_variant = Spec("domination");
  claim.gadget_variant = Spec("domination");
  claim.lower_expr = std::to_string(copies) + "*gamma(G)";
  claim.middle_expr = "gamma(G')";
  claim.upper_expr = claim.lower_expr;
  claim.lower_factor = copies;
  claim.upper_factor = copies;
  return out;
}

GadgetOutput GadgetAlphaDomination(const Graph& g, const Rational& alpha,
                                   std::optional<int> copies_override) {
  RequireProperAlpha(alpha);
  RequireNoIsolated(g);
  const int copies = copies_override.value_or(CeilAlphaRatio(alpha));
  if (copies < 1) throw Error(ErrorCode::kOutOfRange, "N must be >= 1");
  const int k_size = copies * g.max_degree();

  GadgetOutput out;
  out.construction = "alpha";
  out.params.alpha = alpha;
  out.params.copies = copies;
  out.base = g;
  out.attachment_demands.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const int d = g.degree(v);
    const int k = OpenAttachment(alpha, d);
    CheckAttachmentInequality(alpha, d, k, /*closed=*/false);
    if (k > k_size) {
      throw Error(ErrorCode::kBlockTooSmall,
                  "vertex " + std::to_string(v) + " needs " +
                      std::to_string(k) + " attachments, |K| = " +
                      std::to_string(k_size));
    }
    out.attachment_demands[v] = k;
  }

  // K carries no internal edges.
  Builder builder(g.n() + k_size);
  builder.AddCopy(g, 0);
  int cursor = 0;
  std::vector<Vertex> map(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    map[v] = v;
    Attach(builder, v, out.attachment_demands[v], g.n(), k_size, cursor);
  }
  out.embedding.push_back(std::move(map));
  out.gprime = builder.Finish();
  for (Vertex w = g.n(); w < g.n() + k_size; ++w) out.extra.push_back(w);

  SandwichClaim& claim = out.claim;
  claim.base_variant_name = "domination";
  claim.gadget_variant_name = "alpha-domination";
  claim.base_variant = Spec("domination");
  claim.gadget_variant = Spec("alpha-domination", alpha);
  claim.lower_expr = "gamma(G)";
  claim.middle_expr = "gamma_alpha(G')";
  claim.upper_expr = "gamma(G) + " + std::to_string(k_size);
  claim.upper_offset = k_size;
  return out;
}

GadgetOutput GadgetTotalAlpha(const Graph& g, const Rational& alpha,
                              int blocks, int copies_per_block) {
  GadgetOutput out =
      CliqueBlockGadget(g, alpha, blocks, copies_per_block, /*closed=*/false);
  out.construction = "total-alpha";
  return out;
}

GadgetOutput GadgetAlphaRate(const Graph& g, const Rational& alpha, int blocks,
                             int copies_per_block) {
  GadgetOutput out =
      CliqueBlockGadget(g, alpha, blocks, copies_per_block, /*closed=*/true);
  out.construction = "alpha-rate";
  return out;
}

GadgetOutput GadgetKDomination(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kOutOfRange, "k must be >= 1");
  GadgetOutput out;
  out.construction = "k-dom";
  out.params.k = k;
  out.base = g;
  out.gprime = Join(g, CompleteGraph(k - 1));
  std::vector<Vertex> map(g.n());
  for (Vertex v = 0; v < g.n(); ++v) map[v] = v;
  out.embedding.push_back(std::move(map));
  out.attachment_demands.assign(g.n(), k - 1);
  for (Vertex w = g.n(); w < g.n() + k - 1; ++w) out.extra.push_back(w);

  SandwichClaim& claim = out.claim;
  claim.base_variant_name = "domination";
  claim.gadget_variant_name = "k-domination";
  claim.base_variant = Spec("domination");
  claim.gadget_variant = Spec("k-domination", std::nullopt, k);
  // Lower side: S' ∩ V(G) dominates G, because K supplies at most k - 1 of
  // the k required neighbors.
  claim.lower_expr = "gamma(G)";
  claim.middle_expr = "gamma_" + std::to_string(k) + "(G')";
  claim.upper_expr = "gamma(G) + " + std::to_string(k - 1);
  claim.upper_offset = k - 1;
  return out;
}

VertexSet UpperWitness(const GadgetOutput& out, const VertexSet& base_solution) {
  VertexSet witness = out.extra;
  for (const auto& map : out.embedding) {
    for (Vertex v : base_solution) witness.push_back(map[v]);
  }
  std::sort(witness.begin(), witness.end());
  witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
  return witness;
}

SandwichReport VerifySandwich(const GadgetOutput& out, int cap) {
  const Instance base = Compile(out.base, out.claim.base_variant);
  const Instance gadget = Compile(out.gprime, out.claim.gadget_variant);
  if (gadget.n() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "gadget has " + std::to_string(gadget.n()) +
                    " vertices, oracle cap is " + std::to_string(cap));
  }
  const Solution base_opt = BruteForceMinimum(base, cap);
  const Solution gadget_opt = BruteForceMinimum(gadget, cap);

  SandwichReport report;
  report.base_optimum = base_opt.size();
  report.lower =
      out.claim.lower_factor * report.base_optimum + out.claim.lower_offset;
  report.middle = gadget_opt.size();
  report.upper =
      out.claim.upper_factor * report.base_optimum + out.claim.upper_offset;
  report.holds = report.lower <= report.middle && report.middle <= report.upper;
  const VertexSet witness = UpperWitness(out, base_opt.vertices);
  report.witness_size = static_cast<int64_t>(witness.size());
  report.witness_feasible = IsFeasible(gadget, witness).feasible;
  return report;
}

}  // namespace vecdom
