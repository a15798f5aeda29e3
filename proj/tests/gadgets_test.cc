#include "vecdom/gadgets.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "vecdom/error.h"
#include "vecdom/feasibility.h"

namespace vecdom {
namespace {

using testing::NaiveFeasible;
using testing::NaiveOptimum;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no vecdom::Error thrown";
  return ErrorCode::kMalformed;
}

// Both optima recomputed by the test-side search.
std::pair<int, int> NaiveOptima(const GadgetOutput& out) {
  const int base = *NaiveOptimum(Compile(out.base, out.claim.base_variant));
  const int gadget = *NaiveOptimum(Compile(out.gprime, out.claim.gadget_variant));
  return {base, gadget};
}

// Every base vertex v gets attachment_demands[v] neighbors outside its copy.
void CheckAttachments(const GadgetOutput& out) {
  for (const auto& map : out.embedding) {
    for (Vertex v = 0; v < out.base.n(); ++v) {
      EXPECT_EQ(out.gprime.degree(map[v]),
                out.base.degree(v) + out.attachment_demands[v]);
      for (Vertex u : out.base.neighbors(v)) {
        EXPECT_TRUE(out.gprime.HasEdge(map[v], map[u]));
      }
    }
  }
}

TEST(ReplicateTest, Examples) {
  GadgetOutput out = GadgetReplicate(CompleteGraph(2), 3);
  EXPECT_EQ(out.gprime.n(), 6);
  EXPECT_EQ(out.gprime.m(), 3);
  SandwichReport r = VerifySandwich(out);
  EXPECT_EQ(r.lower, 3);
  EXPECT_EQ(r.middle, 3);
  EXPECT_EQ(r.upper, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(NaiveOptima(out), std::make_pair(1, 3));

  out = GadgetReplicate(PathGraph(3), 1);
  EXPECT_EQ(out.gprime, PathGraph(3));

  out = GadgetReplicate(PathGraph(3), 2);
  EXPECT_EQ(VerifySandwich(out).middle, 2);
  EXPECT_EQ(NaiveOptima(out).second, 2);
}

TEST(AlphaDominationTest, K2Half) {
  const GadgetOutput out = GadgetAlphaDomination(CompleteGraph(2), Rational(1, 2));
  EXPECT_EQ(out.params.copies, 1);
  EXPECT_EQ(out.extra.size(), 1u);
  EXPECT_EQ(out.attachment_demands, (RequirementVector{0, 0}));
  EXPECT_EQ(out.gprime.n(), 3);
  const SandwichReport r = VerifySandwich(out);
  EXPECT_EQ(r.lower, 1);
  EXPECT_EQ(r.middle, 1);
  EXPECT_EQ(r.upper, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.witness_feasible);
  EXPECT_EQ(NaiveOptima(out), std::make_pair(1, 1));
}

TEST(AlphaDominationTest, P3HalfHasNoAttachments) {
  const GadgetOutput out = GadgetAlphaDomination(PathGraph(3), Rational(1, 2));
  EXPECT_EQ(out.attachment_demands, (RequirementVector{0, 0, 0}));
  EXPECT_EQ(out.gprime.m(), 2);
  EXPECT_EQ(out.gprime.n(), 3 + 2);
}

TEST(AlphaDominationTest, AttachmentsBelowKSize) {
  for (const Rational alpha : {Rational(1, 3), Rational(1, 2), Rational(2, 3),
                               Rational(3, 4), Rational(7, 8)}) {
    for (const Graph& g : {StarGraph(4), CycleGraph(5), CompleteGraph(4)}) {
      const GadgetOutput out = GadgetAlphaDomination(g, alpha);
      const int k_size = static_cast<int>(out.extra.size());
      for (int k : out.attachment_demands) EXPECT_LT(k, k_size);
      CheckAttachments(out);
      // No edges inside K.
      for (Vertex a : out.extra) {
        for (Vertex b : out.extra) EXPECT_FALSE(out.gprime.HasEdge(a, b));
      }
      for (Vertex v = 0; v < g.n(); ++v) {
        const int d = g.degree(v);
        const int k = out.attachment_demands[v];
        EXPECT_LT(Rational(k, d + k), alpha);
        EXPECT_LE(alpha, Rational(k + 1, d + k));
      }
    }
  }
}

TEST(AlphaDominationTest, Errors) {
  EXPECT_EQ(CodeOf([] { GadgetAlphaDomination(EmptyGraph(2), Rational(1, 2)); }),
            ErrorCode::kIsolatedVertex);
  EXPECT_EQ(CodeOf([] { GadgetAlphaDomination(PathGraph(2), Rational(1)); }),
            ErrorCode::kAlphaOutOfRange);
  EXPECT_EQ(CodeOf([] { GadgetAlphaDomination(PathGraph(2), Rational(0)); }),
            ErrorCode::kAlphaOutOfRange);
}

TEST(TotalAlphaTest, K2Half) {
  const GadgetOutput out = GadgetTotalAlpha(CompleteGraph(2), Rational(1, 2), 2, 1);
  EXPECT_EQ(out.params.block_factor, 1);
  EXPECT_EQ(out.gprime.n(), 6);
  EXPECT_EQ(out.extra, (VertexSet{4, 5}));
  EXPECT_TRUE(out.gprime.HasEdge(4, 5));
  const SandwichReport r = VerifySandwich(out);
  // γ^t(K_2) = 2 and the clique K_2 needs both of its vertices.
  EXPECT_EQ(r.base_optimum, 2);
  EXPECT_EQ(r.lower, 4);
  EXPECT_EQ(r.middle, 6);
  EXPECT_EQ(r.upper, 6);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.witness_feasible);
  EXPECT_EQ(NaiveOptima(out), std::make_pair(2, 6));
}

TEST(TotalAlphaTest, AttachmentBlocks) {
  const Graph g = CycleGraph(4);
  const GadgetOutput out = GadgetTotalAlpha(g, Rational(2, 3), 4, 1);
  // B = 2, k_v = ceil((4/3 - 1)/(1/3)) = 1.
  EXPECT_EQ(out.params.block_factor, 2);
  EXPECT_EQ(out.attachment_demands, (RequirementVector{1, 1, 1, 1}));
  CheckAttachments(out);
  // Copy j attaches only into block j.
  const Vertex clique_first = 16;
  for (int j = 0; j < 4; ++j) {
    for (Vertex v = 0; v < 4; ++v) {
      for (Vertex u : out.gprime.neighbors(out.embedding[j][v])) {
        if (u < clique_first) continue;
        EXPECT_EQ((u - clique_first) / 2, j);
      }
    }
  }
}

TEST(TotalAlphaTest, Errors) {
  EXPECT_EQ(CodeOf([] { GadgetTotalAlpha(CompleteGraph(2), Rational(1, 2), 1, 1); }),
            ErrorCode::kFeasibilityConditionViolated);
  EXPECT_EQ(CodeOf([] { GadgetTotalAlpha(EmptyGraph(2), Rational(1, 2), 2, 1); }),
            ErrorCode::kIsolatedVertex);
  // K_5 vertices need ceil((4/2 - 1)/(1/2)) = 2 attachments; blocks hold 1.
  EXPECT_EQ(CodeOf([] { GadgetTotalAlpha(CompleteGraph(5), Rational(1, 2), 2, 1); }),
            ErrorCode::kBlockTooSmall);
}

TEST(AlphaRateTest, FormulaExamples) {
  GadgetOutput out = GadgetAlphaRate(CompleteGraph(2), Rational(1, 2), 1, 1);
  EXPECT_EQ(out.attachment_demands, (RequirementVector{0, 0}));

  // Each clique vertex receives about Σk_v / B = 9/2 attachments, so the
  // clique needs (1 - α)|K| >= α·5, i.e. |K| = B·m·n_c >= 10.
  EXPECT_EQ(CodeOf([] { GadgetAlphaRate(CompleteGraph(3), Rational(2, 3), 2, 2); }),
            ErrorCode::kFeasibilityConditionViolated);
  out = GadgetAlphaRate(CompleteGraph(3), Rational(2, 3), 3, 2);
  EXPECT_EQ(out.attachment_demands, (RequirementVector{3, 3, 3}));
  EXPECT_LT(Rational(3, 6), Rational(2, 3));
  EXPECT_LE(Rational(2, 3), Rational(4, 6));
  CheckAttachments(out);
}

TEST(AlphaRateTest, SmallBuildSandwich) {
  const GadgetOutput out = GadgetAlphaRate(PathGraph(3), Rational(1, 2), 2, 1);
  const SandwichReport r = VerifySandwich(out);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.witness_feasible);
  const auto [base, gadget] = NaiveOptima(out);
  EXPECT_EQ(r.base_optimum, base);
  EXPECT_EQ(r.middle, gadget);
}

TEST(KDominationTest, Examples) {
  GadgetOutput out = GadgetKDomination(PathGraph(3), 2);
  EXPECT_EQ(out.gprime.n(), 4);
  SandwichReport r = VerifySandwich(out);
  EXPECT_EQ(r.middle, 2);
  EXPECT_EQ(r.upper, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(NaiveOptima(out).second, 2);

  out = GadgetKDomination(PathGraph(3), 1);
  EXPECT_EQ(out.gprime, PathGraph(3));
  EXPECT_TRUE(VerifySandwich(out).holds);

  out = GadgetKDomination(CompleteGraph(2), 3);
  EXPECT_EQ(out.gprime, CompleteGraph(4));
  r = VerifySandwich(out);
  EXPECT_LE(r.middle, 3);
  EXPECT_TRUE(r.holds);
}

TEST(SandwichTest, CorruptedGadgetIsReportedHonestly) {
  GadgetOutput out = GadgetAlphaDomination(StarGraph(3), Rational(2, 3));
  ASSERT_EQ(out.attachment_demands[0], 3);
  const Vertex target = out.gprime.neighbors(0).back();
  out.gprime = out.gprime.WithoutEdge(0, target);
  const SandwichReport r = VerifySandwich(out);
  const auto [base, gadget] = NaiveOptima(out);
  EXPECT_EQ(r.base_optimum, base);
  EXPECT_EQ(r.middle, gadget);
  EXPECT_EQ(r.holds, r.lower <= r.middle && r.middle <= r.upper);
  const Instance inst = Compile(out.gprime, out.claim.gadget_variant);
  EXPECT_EQ(r.witness_feasible, NaiveFeasible(inst, UpperWitness(out, {0})));
}

TEST(SandwichTest, TooLarge) {
  const GadgetOutput out = GadgetReplicate(CycleGraph(5), 5);
  EXPECT_EQ(CodeOf([&] { VerifySandwich(out); }), ErrorCode::kTooLarge);
}

}  // namespace
}  // namespace vecdom
