#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qaffpbw/category.hpp"
#include "qaffpbw/error.hpp"

using namespace qaff;

TEST(TypeInfo, A2) {
  auto t = type_info("A2^1");
  EXPECT_EQ(t.fin_type, FinType::A);
  EXPECT_EQ(t.fin_rank, 2);
  EXPECT_EQ(t.h(), 3);
  EXPECT_EQ(t.star_of(1), 2);
  EXPECT_EQ(t.star_of(2), 1);
}

TEST(TypeInfo, A1HasCoxeterTwoAndTrivialStar) {
  auto t = type_info("A1^1");
  EXPECT_EQ(t.h(), 2);
  EXPECT_EQ(t.star_of(1), 1);
}

TEST(TypeInfo, TableShadows) {
  EXPECT_EQ(type_info("B3^1").fin_type, FinType::A);
  EXPECT_EQ(type_info("B3^1").fin_rank, 5);
  EXPECT_EQ(type_info("C3^1").fin_type, FinType::D);
  EXPECT_EQ(type_info("C3^1").fin_rank, 4);
  EXPECT_EQ(type_info("F4^1").fin_type, FinType::E);
  EXPECT_EQ(type_info("F4^1").fin_rank, 6);
  EXPECT_EQ(type_info("G2^1").fin_type, FinType::D);
  EXPECT_EQ(type_info("G2^1").fin_rank, 4);
  EXPECT_EQ(type_info("D4^3").fin_rank, 4);
  EXPECT_EQ(type_info("E6^2").fin_rank, 6);
  EXPECT_EQ(type_info("A5^2").fin_type, FinType::A);
  EXPECT_EQ(type_info("A5^2").fin_rank, 5);
  EXPECT_EQ(type_info("D5^2").fin_type, FinType::D);
  EXPECT_EQ(type_info("D5^2").fin_rank, 5);
}

TEST(TypeInfo, AllTableRowsRegistered) {
  auto rows = table_rows();
  EXPECT_EQ(rows.size(), 14u);
  for (const auto& r : rows) EXPECT_NO_THROW(type_info(r)) << r;
}

TEST(TypeInfo, CoxeterNumbers) {
  EXPECT_EQ(type_info("D4^1").h(), 6);
  EXPECT_EQ(type_info("E6^1").h(), 12);
  EXPECT_EQ(type_info("E7^1").h(), 18);
  EXPECT_EQ(type_info("E8^1").h(), 30);
  EXPECT_EQ(type_info("D5^1").star_of(4), 5);
  EXPECT_EQ(type_info("D4^1").star_of(4), 4);
}

TEST(TypeInfo, UnknownNamesThrow) {
  EXPECT_THROW(type_info("Q2^1"), Error);
  EXPECT_THROW(type_info("A2"), Error);
  EXPECT_THROW(type_info("B1^1"), Error);
  EXPECT_THROW(type_info("E9^1"), Error);
}

TEST(TypeInfo, MetadataOnlyRowsRaiseUnsupported) {
  auto t = type_info("B3^1");
  EXPECT_THROW(t.h(), UnsupportedError);
  HLCategory cat(t);
  EXPECT_FALSE(cat.has_provider());
  EXPECT_THROW(cat.denominators(), NoProviderError);
}

TEST(DualPoint, Examples) {
  auto t = type_info("A2^1");
  EXPECT_EQ(t.dual_point({1, 0}, 1), (SigmaPoint{2, 3}));
  EXPECT_EQ(t.dual_point({1, 2}, 1), (SigmaPoint{2, 5}));
  EXPECT_EQ(t.dual_point({2, 7}, 0), (SigmaPoint{2, 7}));
}

TEST(DualPoint, InverseAndParity) {
  for (int n = 1; n <= 4; ++n) {
    auto t = type_info("A" + std::to_string(n) + "^1");
    for (const auto& x : t.sigma0_window(-10, 10))
      for (int k = -4; k <= 4; ++k) {
        auto y = t.dual_point(x, k);
        EXPECT_EQ(t.dual_point(y, -k), x);
        EXPECT_TRUE(t.in_sigma0(y));
        auto o = oracle::D(n, {x.node, x.exp}, k);
        EXPECT_EQ(y, (SigmaPoint{o.i, o.p}));
      }
  }
}

TEST(Sigma0, ParityRule) {
  auto t = type_info("A2^1");
  EXPECT_TRUE(t.in_sigma0({1, 0}));
  EXPECT_TRUE(t.in_sigma0({2, 1}));
  EXPECT_TRUE(t.in_sigma0({1, 2}));
  EXPECT_FALSE(t.in_sigma0({1, 1}));
  EXPECT_THROW(t.check_point({2, 0}), Error);
  EXPECT_THROW(t.check_point({3, 0}), Error);
}

TEST(Denominators, Examples) {
  auto a2 = type_info("A2^1");
  EXPECT_EQ(denom_zeros(a2, 1, 1), (std::vector<int>{2}));
  EXPECT_EQ(denom_zeros(a2, 1, 2), (std::vector<int>{3}));
  EXPECT_EQ(denom_zeros(type_info("A3^1"), 1, 3), (std::vector<int>{4}));
  EXPECT_EQ(denom_zeros(type_info("A3^1"), 2, 2), (std::vector<int>{2, 4}));
  EXPECT_THROW(denom_zeros(type_info("D4^1"), 1, 1), NoProviderError);
}

TEST(Denominators, MatchFormulaAndSymmetry) {
  for (int n = 1; n <= 6; ++n) {
    auto table = DenominatorTable::builtin_a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        EXPECT_EQ(table.zeros(i, j), table.zeros(j, i));
        for (int m = -3; m <= 3 * n; ++m) EXPECT_EQ(table.order_at(i, j, m), oracle::zero_order(n, i, j, m));
      }
  }
}

TEST(Denominators, JsonRoundTrip) {
  const std::string text = R"({"type":"A2^1","zeros":{"1,1":[2],"1,2":[3],"2,1":[3],"2,2":[2]}})";
  auto table = DenominatorTable::from_json_text(text);
  EXPECT_EQ(table.zeros(1, 2), (std::vector<int>{3}));
  EXPECT_EQ(DenominatorTable::from_json_text(table.to_json_text()).zeros(2, 2), (std::vector<int>{2}));
  EXPECT_EQ(table.to_json_text(), DenominatorTable::builtin_a(2).to_json_text());
  EXPECT_THROW(DenominatorTable::from_json_text("{"), Error);
  EXPECT_THROW(DenominatorTable::from_json_text(R"({"type":"A2^1","zeros":{"1,9":[2]}})"), Error);
}

TEST(Denominators, ExternalProviderForOtherType) {
  // A provider file makes invariants available for a type without a built-in table.
  auto table = DenominatorTable::from_json_text(R"({"type":"D4^1","zeros":{"1,1":[2,6]}})");
  HLCategory cat(type_info("D4^1"), table);
  EXPECT_TRUE(cat.has_provider());
  EXPECT_EQ(cat.denominators().order_at(1, 1, 6), 1);
  EXPECT_THROW(HLCategory(type_info("A2^1"), table), Error);
}

TEST(SigmaQuiver, A1Window) {
  auto q = sigma_quiver(HLCategory::make("A1^1"), 0, 2);
  ASSERT_EQ(q.arrows.size(), 1u);
  EXPECT_EQ(q.arrows[0].from, (SigmaPoint{1, 0}));
  EXPECT_EQ(q.arrows[0].to, (SigmaPoint{1, 2}));
  EXPECT_EQ(q.arrows[0].multiplicity, 1);
}

TEST(SigmaQuiver, A2Window) {
  auto q = sigma_quiver(HLCategory::make("A2^1"), 0, 3);
  auto has = [&](SigmaPoint a, SigmaPoint b) {
    for (const auto& e : q.arrows)
      if (e.from == a && e.to == b) return e.multiplicity == 1;
    return false;
  };
  EXPECT_TRUE(has({1, 0}, {1, 2}));
  EXPECT_TRUE(has({1, 0}, {2, 3}));
  EXPECT_TRUE(has({2, 1}, {2, 3}));
  for (const auto& e : q.arrows)
    EXPECT_EQ(e.multiplicity, oracle::zero_order(2, e.from.node, e.to.node, e.to.exp - e.from.exp));
}

TEST(SigmaQuiver, EmptyWindow) {
  auto q = sigma_quiver(HLCategory::make("A2^1"), 5, 4);
  EXPECT_TRUE(q.vertices.empty());
  EXPECT_TRUE(q.arrows.empty());
}

TEST(SigmaQuiver, ConnectedOnWideWindows) {
  for (int n = 1; n <= 4; ++n) {
    auto cat = HLCategory::make("A" + std::to_string(n) + "^1");
    const int h = cat.type().h();
    for (int lo = -3; lo <= 3; ++lo) EXPECT_TRUE(sigma_quiver(cat, lo, lo + 2 * h).connected()) << n << " " << lo;
  }
}

TEST(SigmaQuiver, DotUsesQuotedIdsAndRepeatsEdges) {
  auto dot = sigma_quiver(HLCategory::make("A1^1"), 0, 2).to_dot();
  EXPECT_NE(dot.find("\"1_0\" -> \"1_2\""), std::string::npos);
  EXPECT_EQ(dot.find("->", dot.find("->") + 1), std::string::npos);
}

TEST(SigmaQuiver, NeedsProvider) { EXPECT_THROW(sigma_quiver(HLCategory::make("D4^1"), 0, 4), NoProviderError); }
