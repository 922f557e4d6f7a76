#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qaffpbw/error.hpp"
#include "qaffpbw/invariants.hpp"

using namespace qaff;

namespace {

const HLCategory& A(int n) {
  static std::vector<HLCategory> cats = [] {
    std::vector<HLCategory> v;
    for (int k = 1; k <= 5; ++k) v.push_back(HLCategory::make("A" + std::to_string(k) + "^1"));
    return v;
  }();
  return cats[static_cast<std::size_t>(n - 1)];
}

oracle::Pt P(SigmaPoint x) { return {x.node, x.exp}; }

}  // namespace

TEST(Invariants, DExamples) {
  EXPECT_EQ(d_fund(A(2), {1, 0}, {1, 2}), 1);
  EXPECT_EQ(d_fund(A(2), {1, 0}, {1, 0}), 0);
  EXPECT_EQ(d_fund(A(2), {1, 0}, {2, 1}), 0);
}

TEST(Invariants, LambdaExamples) {
  EXPECT_EQ(lambda_fund(A(2), {1, 0}, {1, 2}), 1);
  EXPECT_EQ(lambda_inf_fund(A(2), {1, 0}, {1, 0}), -2);
  EXPECT_EQ(lambda_inf_fund(A(2), {1, 0}, {1, 2}), 1);
}

TEST(Invariants, DeTildeExamples) {
  EXPECT_EQ(de_tilde_fund(A(2), {1, 0}, {1, 2}), 0);
  EXPECT_EQ(de_tilde_fund(A(2), {2, 3}, {1, 2}), 0);
  EXPECT_EQ(de_tilde_fund(A(2), {2, 3}, {1, 4}), 1);
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : A(n).type().sigma0_window(-3, 3))
      for (const auto& y : A(n).type().sigma0_window(-6, 6))
        EXPECT_EQ(2 * de_tilde_fund(A(n), x, y), oracle::lambda(n, P(x), P(y)) - oracle::lambda_inf(n, P(x), P(y)));
  for (const auto& x : A(3).type().sigma0_window(-4, 4)) EXPECT_EQ(de_tilde_fund(A(3), x, x), 1);
}

TEST(Invariants, ZeroCExamples) {
  EXPECT_EQ(zero_c_fund(A(2), {1, 0}, {1, 2}), 1);
  EXPECT_EQ(zero_c_fund(A(2), {1, 0}, {2, 3}), 1);
  EXPECT_EQ(zero_c_fund(A(2), {1, 0}, {1, 8}), 0);
}

TEST(Invariants, PairingExamples) {
  EXPECT_EQ(pairing_E(A(2), {1, 0}, {1, 0}), 2);
  EXPECT_EQ(pairing_E(A(2), {1, 0}, {1, 2}), -1);
  EXPECT_EQ(pairing_E(A(2), {2, 1}, {1, 0}), 1);
}

TEST(Invariants, RootCoordinates) {
  std::vector<SigmaPoint> basis{{1, 0}, {1, 2}};
  EXPECT_EQ(root_coordinates(A(2), {2, 1}, basis).coeffs, (std::vector<int>{1, 1}));
  EXPECT_EQ(root_coordinates(A(2), {1, 0}, basis).coeffs, (std::vector<int>{1, 0}));
  EXPECT_EQ(root_coordinates(A(2), {2, 3}, basis).coeffs, (std::vector<int>{-1, 0}));
  EXPECT_THROW(root_coordinates(A(2), {2, 1}, {{1, 0}, {2, 3}}), Error);
}

TEST(Invariants, WordSums) {
  EXPECT_EQ(lambda_inf_word(A(2), {{1, 0}, {1, 2}}, {{2, 1}}), -2);
  EXPECT_EQ(lambda_inf_word(A(2), {}, {{2, 1}}), 0);
  EXPECT_EQ(lambda_inf_word(A(2), {{1, 0}}, {{1, 2}}), lambda_inf_fund(A(2), {1, 0}, {1, 2}));
  auto v = lambda_word(A(2), {{1, 0}, {1, 2}}, {{2, 1}});
  EXPECT_EQ(v.exactness, Exactness::UpperBound);
  EXPECT_TRUE(lambda_word(A(2), {{1, 0}}, {{2, 1}}).exact());
}

TEST(Invariants, NoProvider) {
  auto cat = HLCategory::make("D4^1");
  EXPECT_THROW(d_fund(cat, {1, 0}, {1, 2}), NoProviderError);
  EXPECT_THROW(lambda_fund(cat, {1, 0}, {1, 2}), NoProviderError);
}

TEST(Invariants, AgreeWithOracleOnWindows) {
  for (int n = 1; n <= 4; ++n) {
    auto pts = A(n).type().sigma0_window(-2 * (n + 1), 2 * (n + 1));
    for (const auto& x : pts)
      for (const auto& y : pts) {
        ASSERT_EQ(d_fund(A(n), x, y), oracle::d(n, P(x), P(y)));
        ASSERT_EQ(lambda_fund(A(n), x, y), oracle::lambda(n, P(x), P(y)));
        ASSERT_EQ(lambda_fund(A(n), x, y), oracle::lambda_dual_route(n, P(x), P(y)));
        ASSERT_EQ(lambda_inf_fund(A(n), x, y), oracle::lambda_inf(n, P(x), P(y)));
      }
  }
}

TEST(Invariants, RandomIdentities) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const auto& cat = A(n);
    auto pts = cat.type().sigma0_window(-15, 15);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    SigmaPoint x = pts[pick(rng)], y = pts[pick(rng)];
    SigmaPoint dx = cat.type().dual_point(x, 1);
    EXPECT_EQ(d_fund(cat, x, y), d_fund(cat, y, x));
    EXPECT_EQ(lambda_inf_fund(cat, x, y), lambda_inf_fund(cat, y, x));
    EXPECT_EQ(lambda_inf_fund(cat, dx, y), -lambda_inf_fund(cat, x, y));
    EXPECT_EQ(lambda_fund(cat, x, y), lambda_fund(cat, y, dx));
    EXPECT_EQ((lambda_fund(cat, x, y) - lambda_inf_fund(cat, x, y)) % 2, 0);
    EXPECT_EQ(2 * d_fund(cat, x, y), lambda_fund(cat, x, y) + lambda_fund(cat, y, x));
    EXPECT_EQ(2 * de_tilde_fund(cat, x, y), lambda_fund(cat, x, y) - lambda_inf_fund(cat, x, y));
    EXPECT_EQ(d_fund(cat, dx, cat.type().dual_point(y, 1)), d_fund(cat, x, y));
    EXPECT_GE(d_fund(cat, x, y), 0);
  }
}

TEST(Invariants, RootModulePattern) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& x : A(n).type().sigma0_window(-6, 6))
      for (int k = -6; k <= 6; ++k)
        EXPECT_EQ(d_fund(A(n), x, A(n).type().dual_point(x, k)), (k == 1 || k == -1) ? 1 : 0);
}

TEST(Invariants, ShiftBoundIsSafe) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& x : A(n).type().sigma0_window(-8, 8))
      for (const auto& y : A(n).type().sigma0_window(-8, 8)) {
        const int b = shift_bound(A(n), x, y);
        for (int k = b + 1; k <= b + 4; ++k) {
          EXPECT_EQ(d_fund(A(n), x, A(n).type().dual_point(y, k)), 0);
          EXPECT_EQ(d_fund(A(n), x, A(n).type().dual_point(y, -k)), 0);
        }
      }
}

TEST(BlockFunctional, PairingAndSigns) {
  const auto& cat = A(3);
  for (const auto& x : cat.type().sigma0_window(-8, 8)) {
    auto e = BlockFunctional::of(cat, x);
    EXPECT_EQ(e.pairing(cat, e), 2);
    auto de = BlockFunctional::of(cat, cat.type().dual_point(x, 1));
    EXPECT_EQ(de.profile(cat), e.negated().profile(cat));
    for (const auto& y : cat.type().sigma0_window(-4, 4)) EXPECT_EQ(e.value_at(cat, y), lambda_inf_fund(cat, x, y));
  }
}
