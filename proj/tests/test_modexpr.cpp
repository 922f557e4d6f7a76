#include <gtest/gtest.h>

#include <random>

#include "qaffpbw/error.hpp"
#include "qaffpbw/modexpr.hpp"

using namespace qaff;

namespace {

ModuleExpr F(int i, int p) { return ModuleExpr::fund(i, p); }
ModuleExpr H(std::vector<ModuleExpr> f) { return ModuleExpr::head_node(std::move(f)); }

const HLCategory plain = HLCategory::make("A2^1");
const HLCategory facts = HLCategory::with_builtin_facts("A2^1");

ModuleExpr random_expr(const HLCategory& cat, std::mt19937_64& rng, int depth) {
  auto pts = cat.type().sigma0_window(-4, 8);
  std::uniform_int_distribution<int> kind(0, depth <= 1 ? 0 : 9);
  int k = kind(rng);
  if (k <= 4) return ModuleExpr::fund(pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)]);
  if (k == 5) return ModuleExpr::one();
  if (k == 6) return ModuleExpr::dual_node(std::uniform_int_distribution<int>(-2, 2)(rng), random_expr(cat, rng, depth - 1));
  std::vector<ModuleExpr> f;
  int len = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int t = 0; t < len; ++t) f.push_back(random_expr(cat, rng, depth - 1));
  return ModuleExpr::head_node(std::move(f));
}

}  // namespace

TEST(ModExpr, Accessors) {
  auto e = H({F(1, 0), ModuleExpr::dual_node(1, F(1, 2))});
  EXPECT_TRUE(e.is_head());
  EXPECT_EQ(e.node_count(), 4u);
  EXPECT_EQ(e.depth(), 3);
  EXPECT_EQ(e.leaves(), (std::vector<SigmaPoint>{{1, 0}, {1, 2}}));
  EXPECT_THROW(e.point(), Error);
  EXPECT_EQ(F(1, 0).to_string(), "(1,0)");
}

TEST(ModExpr, DualExamples) {
  EXPECT_EQ(dual(plain, F(1, 0), 1), F(2, 3));
  EXPECT_EQ(dual(plain, H({F(1, 0), F(1, 2)}), 1), H({F(2, 3), F(2, 5)}));
  EXPECT_EQ(dual(plain, ModuleExpr::one(), 5), ModuleExpr::one());
  EXPECT_EQ(dual(plain, F(2, 7), 0), F(2, 7));
}

TEST(ModExpr, DualDoesNotDistributeOverUncertifiedHead) {
  // A factor list with a non-fundamental member is never certified.
  auto inner = H({F(1, 0), ModuleExpr::dual_node(1, H({F(1, 0), F(1, 4)}))});
  auto e = dual(plain, inner, 1);
  EXPECT_TRUE(e.is_dual());
  EXPECT_EQ(dual(plain, e, -1), normalize(plain, inner));
}

TEST(ModExpr, CertifyNormal) {
  EXPECT_TRUE(certify_normal(plain, {F(1, 0), F(1, 2)}));
  EXPECT_TRUE(certify_normal(plain, {F(1, 2), F(1, 0)}));
  EXPECT_FALSE(certify_normal(plain, {F(1, 0), F(2, 5)}));  // D(1,0) = (2,3), d((2,3),(2,5)) = 1
  EXPECT_FALSE(certify_normal(plain, {F(1, 0), H({F(1, 0), F(1, 2)})}));
}

TEST(ModExpr, HeadExamples) {
  auto e = H({H({F(1, 2), F(1, 0)}), F(2, 5)});
  EXPECT_EQ(normalize(plain, e), F(1, 0));
  EXPECT_EQ(head(facts, {F(1, 0), F(1, 2)}), F(2, 1));
  EXPECT_EQ(head(plain, {F(1, 0), F(1, 2)}), H({F(1, 0), F(1, 2)}));
  EXPECT_EQ(head(plain, {F(1, 0)}), F(1, 0));
  EXPECT_EQ(head(plain, {}), ModuleExpr::one());
  EXPECT_EQ(head(plain, {ModuleExpr::one(), F(1, 0), ModuleExpr::one()}), F(1, 0));
}

TEST(ModExpr, FusionIsShiftAndStarEquivariant) {
  EXPECT_EQ(head(facts, {F(1, 4), F(1, 6)}), F(2, 5));
  EXPECT_EQ(head(facts, {F(2, 1), F(2, 3)}), F(1, 2));   // D-image
  EXPECT_EQ(head(facts, {F(2, -3), F(2, -1)}), F(1, -2));
  EXPECT_EQ(head(facts, {F(1, 2), F(1, 0)}), H({F(1, 2), F(1, 0)}));  // opposite order: no fact
}

TEST(ModExpr, MndmFourForms) {
  // (L nabla X) nabla DL, D^{-1}L nabla (X nabla L), L nabla (X nabla DL), (D^{-1}L nabla X) nabla L
  for (auto [l, x] : {std::pair{F(1, 0), F(2, 1)}, std::pair{F(2, 1), F(1, 2)}, std::pair{F(1, 2), F(2, 3)}}) {
    auto dl = dual(plain, l, 1), dil = dual(plain, l, -1);
    EXPECT_EQ(normalize(plain, H({H({l, x}), dl})), x);
    EXPECT_EQ(normalize(plain, H({dil, H({x, l})})), x);
    EXPECT_EQ(normalize(plain, H({l, H({x, dl})})), x);
    EXPECT_EQ(normalize(plain, H({H({dil, x}), l})), x);
  }
  EXPECT_EQ(normalize(plain, H({F(1, 0), F(2, 3)})), ModuleExpr::one());
}

TEST(ModExpr, MndmUpToCommutation) {
  EXPECT_EQ(normalize(plain, H({F(1, 0), F(1, 2), F(2, 3)})), F(1, 2));
  // (2,1) commutes with (1,0), so L = (1,0) can be moved to the front.
  EXPECT_EQ(d_fund(plain, {2, 1}, {1, 0}), 0);
  EXPECT_EQ(normalize(plain, H({F(2, 1), F(1, 0), F(1, 2), F(2, 3)})), H({F(2, 1), F(1, 2)}));
  // (2,5) does not commute with (2,3), so DL cannot be moved to the back.
  EXPECT_EQ(d_fund(plain, {2, 3}, {2, 5}), 1);
  auto blocked = normalize(plain, H({F(1, 0), F(2, 3), F(2, 5)}));
  EXPECT_EQ(blocked, H({F(1, 0), F(2, 3), F(2, 5)}));
}

TEST(ModExpr, CanonicalOrderOfCommutingFactors) {
  EXPECT_EQ(d_fund(plain, {1, 0}, {2, 1}), 0);
  EXPECT_EQ(normalize(plain, H({F(2, 1), F(1, 0)})), H({F(1, 0), F(2, 1)}));
  EXPECT_EQ(normalize(plain, H({F(1, 2), F(1, 0)})), H({F(1, 2), F(1, 0)}));
}

TEST(ModExpr, Equal) {
  EXPECT_EQ(equal(plain, H({F(1, 2), F(1, 0)}), H({F(1, 0), F(1, 2)})), Verdict::Unknown);
  EXPECT_EQ(equal(plain, F(1, 0), F(1, 0)), Verdict::Equal);
  EXPECT_EQ(equal(plain, F(1, 0), F(2, 1)), Verdict::Distinct);
  EXPECT_EQ(equal(facts, H({F(1, 0), F(1, 2)}), F(2, 1)), Verdict::Equal);
  // Different block functionals separate heads.
  EXPECT_EQ(equal(plain, H({F(1, 2), F(1, 0)}), H({F(1, 2), F(1, 4)})), Verdict::Distinct);
}

TEST(ModExpr, LambdaBounds) {
  auto e = H({F(1, 2), F(1, 0)});
  EXPECT_EQ(lambda_inf(plain, e, {2, 1}), lambda_inf_fund(plain, {1, 2}, {2, 1}) + lambda_inf_fund(plain, {1, 0}, {2, 1}));
  auto b = lambda_bound(plain, e, {2, 1});
  EXPECT_EQ(b.exactness, Exactness::UpperBound);
  EXPECT_TRUE(lambda_bound(plain, ModuleExpr::dual_node(1, F(1, 0)), {1, 2}).exact());
  EXPECT_EQ(lambda_bound(plain, ModuleExpr::dual_node(1, F(1, 0)), {1, 2}).value, lambda_fund(plain, {2, 3}, {1, 2}));
  EXPECT_EQ(lambda_bound(plain, SigmaPoint{1, 2}, ModuleExpr::dual_node(-1, F(2, 3))).value,
            lambda_fund(plain, {1, 2}, {1, 0}));
  EXPECT_EQ(d_bound(plain, e, {1, 8}), (InvariantValue{0, Exactness::Exact}));
}

TEST(ModExpr, DualRoundTripOnNormalForms) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    auto e = normalize(plain, random_expr(plain, rng, 4));
    for (int k = -2; k <= 2; ++k) EXPECT_EQ(dual(plain, dual(plain, e, k), -k), e) << e.to_string();
  }
}

TEST(ModExpr, RandomSchedulesAgree) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 2000; ++t) {
    auto e = random_expr(plain, gen, 5);
    std::mt19937_64 s1(1000 + t), s2(5000 + t);
    auto a = normalize(plain, e, s1);
    auto b = normalize(plain, e, s2);
    ASSERT_EQ(a, b) << e.to_string();
    ASSERT_EQ(a, normalize(plain, e)) << e.to_string();
    ASSERT_EQ(normalize(plain, a), a);
  }
}

TEST(ModExpr, NormalFormShape) {
  std::mt19937_64 gen(5);
  std::function<void(const ModuleExpr&)> check = [&](const ModuleExpr& e) {
    if (e.is_dual()) {
      EXPECT_TRUE(e.inner().is_head());
      EXPECT_NE(e.shift(), 0);
    }
    if (e.is_head()) {
      EXPECT_GE(e.factors().size(), 2u);
      for (const auto& f : e.factors()) {
        EXPECT_FALSE(f.is_head());
        EXPECT_FALSE(f.is_one());
      }
    }
    if (e.is_dual()) check(e.inner());
    if (e.is_head())
      for (const auto& f : e.factors()) check(f);
  };
  for (int t = 0; t < 1000; ++t) check(normalize(plain, random_expr(plain, gen, 6)));
}
