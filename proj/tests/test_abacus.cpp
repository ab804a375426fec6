#include <gtest/gtest.h>

#include "affcore/abacus.hpp"

using namespace affcore;

namespace {

const AffineKind kC2{Family::C1, 2};
const AffineKind kD2{Family::D2, 2};
const AffineKind kB3{Family::B1, 3};

// transpose by counting, independent of Partition::conjugate
std::vector<std::int64_t> transposeByCount(const std::vector<std::int64_t>& p) {
  std::vector<std::int64_t> out;
  for (std::int64_t c = 1; !p.empty() && c <= p.front(); ++c)
    out.push_back(std::count_if(p.begin(), p.end(), [c](auto x) { return x >= c; }));
  return out;
}

// every hook length from the beta-set: pairs (bead b, gap g < b)
std::vector<std::int64_t> hooksFromBeta(const std::vector<std::int64_t>& p) {
  std::vector<std::int64_t> beads;
  const auto n = static_cast<std::int64_t>(p.size());
  for (std::int64_t i = 0; i < n; ++i) beads.push_back(p[i] + n - 1 - i);
  std::vector<std::int64_t> out;
  for (auto b : beads)
    for (std::int64_t g = 0; g < b; ++g)
      if (std::find(beads.begin(), beads.end(), g) == beads.end()) out.push_back(b - g);
  return out;
}

}  // namespace

TEST(FromPartition, BeadSet) {
  const auto a = fromPartition(kC2, Partition{7, 5, 4, 1, 1}, 0);
  for (std::int64_t x = -40; x <= 20; ++x) {
    const bool want = x == 6 || x == 3 || x == 1 || x == -3 || x == -4 || (x <= -6);
    EXPECT_EQ(a.hasBead(x), want) << x;
  }
  EXPECT_EQ(renderBeads(a, -9, 11), "●●●●○●●○○|○●○●○○●○○○○○");
}

TEST(FromPartition, Vacuum) {
  const auto a = fromPartition(kC2, Partition{}, 0);
  for (std::int64_t x = -10; x <= 10; ++x) EXPECT_EQ(a.hasBead(x), x < 0);
}

TEST(FromPartition, ChargeOne) {
  const auto a = fromPartition(kD2, Partition{4, 2, 1, 1, 1, 1, 1}, 1);
  for (std::int64_t x = -30; x <= 10; ++x) {
    const bool want = x == 4 || x == 1 || (x <= -1 && x >= -5) || x <= -7;
    EXPECT_EQ(a.hasBead(x), want) << x;
  }
}

TEST(ToPartition, RoundTrip) {
  const auto a = fromPartition(kC2, Partition{7, 5, 4, 1, 1}, 0);
  const auto [lam, j] = toPartition(a);
  EXPECT_EQ(lam.parts(), (std::vector<std::int64_t>{7, 5, 4, 1, 1}));
  EXPECT_EQ(j, 0);
  const auto v = toPartition(Abacus(kC2, 2, WholeAbacus{Partition{}, 2}));
  EXPECT_TRUE(v.first.empty());
  EXPECT_EQ(v.second, 2);
}

TEST(WeightAbacus, Shapes) {
  const auto c = weightAbacus(kC2, 1);
  ASSERT_TRUE(c.isWhole());
  EXPECT_TRUE(c.whole().lambda.empty());
  EXPECT_EQ(c.whole().charge, 1);

  const auto b0 = weightAbacus(kB3, 0);
  ASSERT_FALSE(b0.isWhole());
  EXPECT_EQ(b0.half().base, 0);
  EXPECT_TRUE(b0.half().beads.empty());

  const auto b3 = weightAbacus(kB3, 3);
  ASSERT_FALSE(b3.isWhole());
  EXPECT_EQ(b3.half().base, 4);
  EXPECT_TRUE(b3.half().beads.empty());
}

TEST(Abacus, ShapeErrors) {
  EXPECT_THROW(fromPartition(kB3, Partition{1}, 0), ShapeError);  // needs a half abacus
  EXPECT_THROW(fromPartition(kC2, Partition{1}, 3), ShapeError);
  EXPECT_THROW(HalfAbacus::make(2, {1}), ShapeError);
  EXPECT_THROW(HalfAbacus::make(0, {1, 1}), ShapeError);
  EXPECT_THROW(Partition({1, 2}), ShapeError);
}

TEST(Conjugate, Examples) {
  const auto a = conjugate(fromPartition(kC2, Partition{5, 2}, 1));
  EXPECT_EQ(a.whole().lambda.parts(), (std::vector<std::int64_t>{2, 2, 1, 1, 1}));
  EXPECT_EQ(a.charge(), 1);
  const auto e = conjugate(weightAbacus(kC2, 0));
  EXPECT_EQ(e.charge(), 2);
  EXPECT_TRUE(e.whole().lambda.empty());
  const auto x = fromPartition(kC2, Partition{7, 5, 4, 1, 1}, 0);
  EXPECT_EQ(conjugate(conjugate(x)), x);
}

TEST(Conjugate, MatchesTranspose) {
  for (auto p : std::vector<std::vector<std::int64_t>>{{1}, {3, 1}, {4, 4, 2}, {6, 1, 1, 1}, {2, 2, 2, 2, 1}}) {
    const auto a = conjugate(fromPartition(kC2, Partition(p), 1));
    EXPECT_EQ(a.whole().lambda.parts(), transposeByCount(p));
  }
}

TEST(AssociateTwoSided, HalfAbacusExample) {
  const auto& ctx = *contextFor(kB3);
  const HalfAbacus h{0, {0, 3, 5, 7, 8, 10}};
  const WholeAbacus w = associateTwoSided(h, ctx);
  const std::set<std::int64_t> missing{-1, -4, -6, -8, -9, -11};
  for (std::int64_t x = -30; x < 0; ++x) EXPECT_EQ(w.hasBead(x), !missing.count(x)) << x;
  for (std::int64_t x = 0; x <= 12; ++x) EXPECT_EQ(w.hasBead(x), h.hasBead(x)) << x;
  const std::vector<std::int64_t> want{11, 10, 10, 9, 8, 6, 5, 5, 4, 3, 1};
  EXPECT_EQ(w.lambda.parts(), want);
  EXPECT_EQ(doubleDistinct(h, ctx).parts(), want);
}

TEST(AssociateTwoSided, EmptyIsVacuum) {
  const auto& ctx = *contextFor(kB3);
  const WholeAbacus w = associateTwoSided(HalfAbacus{0, {}}, ctx);
  EXPECT_TRUE(w.lambda.empty());
  EXPECT_TRUE(doubleDistinct(HalfAbacus{0, {}}, ctx).empty());
}

TEST(DoubleDistinct, AgreesWithTwoSided) {
  // every half abacus with beads below 9, for each legal base
  for (auto kind : {kB3, AffineKind{Family::D2, 3}, AffineKind{Family::A2lm1_2, 3}, AffineKind{Family::D1, 4},
                    AffineKind{Family::A2l_2, 2}}) {
    const auto& ctx = *contextFor(kind);
    std::set<std::int64_t> bases;
    for (int j = 0; j <= ctx.l(); ++j)
      if (auto w = halfWeightData(ctx, j)) bases.insert(w->base);
    for (auto base : bases)
      for (unsigned mask = 0; mask < (1u << 9); ++mask) {
        std::vector<std::int64_t> beads;
        for (int b = 0; b < 9; ++b)
          if (mask >> b & 1) beads.push_back(base + b);
        const HalfAbacus h{base, beads};
        EXPECT_EQ(doubleDistinct(h, ctx).str(), associateTwoSided(h, ctx).lambda.str()) << kind.str() << " base " << base << " mask " << mask;
      }
  }
}

TEST(IsEven, Examples) {
  EXPECT_TRUE(isEven(Partition{}));
  EXPECT_FALSE(isEven(Partition{1}));
  EXPECT_TRUE(isEven(Partition{11, 10, 10, 9, 8, 6, 5, 5, 4, 3, 1}));
  for (auto p : std::vector<std::vector<std::int64_t>>{{}, {1}, {3, 3, 1}, {5, 4, 4, 2}, {2, 2}})
    EXPECT_EQ(isEven(Partition(p)), isEvenByBeads(Partition(p)));
}

TEST(TypeACore, Examples) {
  EXPECT_TRUE(isCoreTypeA(Partition{}, 5));
  EXPECT_FALSE(isCoreTypeA(Partition{2, 1}, 3));
  EXPECT_TRUE(isCoreTypeA(Partition{3, 1, 1}, 4));
  auto hooks = hookLengths(Partition{3, 1, 1});
  std::sort(hooks.begin(), hooks.end());
  EXPECT_EQ(hooks, (std::vector<std::int64_t>{1, 1, 2, 2, 5}));
}

TEST(TypeACore, HooksMatchBetaSet) {
  for (auto p : std::vector<std::vector<std::int64_t>>{{4, 2, 1}, {5, 5, 3, 1}, {7, 5, 4, 1, 1}, {2, 2, 2}}) {
    auto a = hookLengths(Partition(p));
    auto b = hooksFromBeta(p);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    for (std::int64_t e = 2; e <= 8; ++e)
      EXPECT_EQ(isCoreTypeA(Partition(p), e), std::find(b.begin(), b.end(), e) == b.end() &&
                                                  std::none_of(b.begin(), b.end(), [e](auto h) { return h % e == 0; }));
  }
}
