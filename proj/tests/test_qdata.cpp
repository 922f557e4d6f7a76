#include <gtest/gtest.h>

#include <set>

#include "qaffpbw/error.hpp"
#include "qaffpbw/qdata.hpp"

using namespace qaff;

namespace {

QDatum A2(int x1, int x2) { return QDatum{FinType::A, 2, {x1, x2}, {}}; }

HLCategory cat_a(int n) { return HLCategory::make("A" + std::to_string(n) + "^1"); }

}  // namespace

TEST(QData, Validate) {
  EXPECT_NO_THROW(validate(A2(0, 1)));
  EXPECT_THROW(validate(A2(0, 2)), Error);
  EXPECT_NO_THROW(validate(A2(2, 1)));
  EXPECT_THROW(validate(QDatum{FinType::A, 2, {0}, {}}), Error);
  EXPECT_THROW(validate(QDatum{FinType::A, 2, {0, 1}, {2, 1}}), UnsupportedError);
  EXPECT_NO_THROW(validate(QDatum{FinType::A, 2, {0, 1}, {1, 2}}));
}

TEST(QData, Adapted) {
  EXPECT_TRUE(is_adapted(A2(0, 1), {1, 2, 1}));
  EXPECT_FALSE(is_adapted(A2(0, 1), {2, 1, 2}));
  EXPECT_TRUE(is_adapted(A2(2, 1), {2, 1, 2}));
  EXPECT_FALSE(is_adapted(A2(0, 1), {1, 2}));
  EXPECT_EQ(adapted_words(A2(0, 1)), (std::vector<Word>{{1, 2, 1}}));
}

TEST(QData, AdaptedWordsAreAdaptedAndReduced) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& q : all_q_data(FinType::A, n)) {
      auto words = adapted_words(q);
      ASSERT_FALSE(words.empty());
      RootSystem rs(q.cartan());
      for (const auto& w : words) {
        EXPECT_TRUE(rs.spells_longest(w));
        EXPECT_TRUE(is_adapted(q, w));
      }
      EXPECT_EQ(words.front(), adapted_word(q));
    }
}

TEST(QData, AllQDataCount) {
  EXPECT_EQ(all_q_data(FinType::A, 1).size(), 1u);
  EXPECT_EQ(all_q_data(FinType::A, 4).size(), 8u);
  EXPECT_EQ(all_q_data(FinType::D, 4).size(), 8u);
  for (const auto& q : all_q_data(FinType::D, 5)) EXPECT_NO_THROW(validate(q));
}

TEST(QData, PhiExamples) {
  auto cat = cat_a(2);
  auto m = phi(cat, A2(0, 1), {1, 2, 1});
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0].second, (SigmaPoint{1, 0}));
  EXPECT_EQ(m[1].second, (SigmaPoint{2, 1}));
  EXPECT_EQ(m[2].second, (SigmaPoint{1, 2}));
  EXPECT_EQ(m[1].first.coeffs, (std::vector<int>{1, 1}));

  auto m2 = phi(cat, A2(2, 1), {2, 1, 2});
  EXPECT_EQ(m2[0].second, (SigmaPoint{2, 1}));
  EXPECT_EQ(m2[1].second, (SigmaPoint{1, 2}));
  EXPECT_EQ(m2[2].second, (SigmaPoint{2, 3}));

  auto m1 = phi(cat_a(1), QDatum{FinType::A, 1, {0}, {}}, {1});
  EXPECT_EQ(m1[0].second, (SigmaPoint{1, 0}));

  EXPECT_THROW(phi(cat, A2(0, 1), {2, 1, 2}), Error);
  EXPECT_THROW(phi(cat, A2(1, 2), {1, 2, 1}), Error);  // wrong parity component
}

TEST(QData, PhiIndependentOfAdaptedWord) {
  for (int n = 1; n <= 4; ++n) {
    auto cat = cat_a(n);
    for (const auto& q : all_q_data(FinType::A, n)) {
      std::map<Root, SigmaPoint> first;
      for (const auto& [r, x] : phi(cat, q, adapted_word(q))) first[r] = x;
      for (const auto& w : adapted_words(q)) {
        std::map<Root, SigmaPoint> other;
        for (const auto& [r, x] : phi(cat, q, w)) other[r] = x;
        EXPECT_EQ(first, other);
      }
    }
  }
}

TEST(QData, ImageTilesSigma0) {
  for (int n = 1; n <= 4; ++n) {
    auto cat = cat_a(n);
    const auto& t = cat.type();
    for (const auto& q : all_q_data(FinType::A, n)) {
      auto m = phi(cat, q, adapted_word(q));
      std::set<SigmaPoint> image;
      for (const auto& e : m) image.insert(e.second);
      EXPECT_EQ(image.size(), m.size());
      // Count how often each window point is hit by D^k(image).
      std::map<SigmaPoint, int> hits;
      for (const auto& x : image)
        for (int k = -10; k <= 10; ++k) hits[t.dual_point(x, k)]++;
      for (const auto& y : t.sigma0_window(-3, 3 + 2 * t.h())) EXPECT_EQ(hits[y], 1) << y.to_string();
    }
  }
}

TEST(QData, DatumFromQ) {
  auto cat = cat_a(2);
  auto d = datum_from_q(cat, A2(0, 1));
  EXPECT_EQ(d.members(), (std::vector<ModuleExpr>{ModuleExpr::fund(1, 0), ModuleExpr::fund(1, 2)}));
  EXPECT_EQ(d.origin(), Origin::FromQ);
  EXPECT_EQ(d.completeness(), Completeness::Complete);
  EXPECT_EQ(d.strength(), Strength::Verified);
  auto d2 = datum_from_q(cat, A2(2, 1));
  EXPECT_EQ(d2.members(), (std::vector<ModuleExpr>{ModuleExpr::fund(2, 3), ModuleExpr::fund(2, 1)}));
  auto d1 = datum_from_q(cat_a(1), QDatum{FinType::A, 1, {0}, {}});
  EXPECT_EQ(d1.members(), (std::vector<ModuleExpr>{ModuleExpr::fund(1, 0)}));
}

TEST(QData, TypeMismatchAndUnsupported) {
  EXPECT_THROW(datum_from_q(cat_a(3), A2(0, 1)), Error);
  EXPECT_THROW(datum_from_q(HLCategory::make("B2^1"), QDatum{FinType::A, 3, {0, 1, 0}, {}}), UnsupportedError);
  EXPECT_THROW(adapted_words(QDatum{FinType::A, 5, {0, 1, 2, 3, 4}, {}}), Error);
}

TEST(QData, DatumFromQWithoutProviderIsInherited) {
  auto cat = HLCategory::make("D4^1");
  auto d = datum_from_q(cat, all_q_data(FinType::D, 4).front());
  EXPECT_EQ(d.strength(), Strength::Inherited);
  EXPECT_EQ(d.size(), 4);
}
