#include <gtest/gtest.h>

#include "affcore/weyl.hpp"

using namespace affcore;

namespace {

const AffineKind kC2{Family::C1, 2};
const AffineKind kD2{Family::D2, 2};

std::vector<AffineKind> kinds(int maxL = 4) {
  std::vector<AffineKind> out;
  for (Family f : kAllFamilies)
    for (int l = minimumRank(f); l <= maxL; ++l) out.push_back({f, l});
  return out;
}

Quad2 cross(const QVector& o, const QVector& a, const QVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// strictly inside, exact
bool insideTriangle(const QVector& p, const std::vector<QVector>& t) {
  const int s0 = cross(t[0], t[1], p).sign(), s1 = cross(t[1], t[2], p).sign(), s2 = cross(t[2], t[0], p).sign();
  return s0 != 0 && s0 == s1 && s1 == s2;
}

}  // namespace

TEST(Generators, Involutions) {
  for (auto kind : kinds()) {
    const auto R = realizationFor(kind);
    for (int i = 0; i <= kind.l; ++i) {
      const auto g = generatorIsometry(*R, i);
      EXPECT_EQ(g.after(g), AffineIsometry::identity(kind.l)) << kind.str() << " s" << i;
    }
  }
}

TEST(Generators, BraidOrders) {
  const std::map<int, int> order{{0, 2}, {1, 3}, {2, 4}, {3, 6}};
  for (auto kind : kinds()) {
    const auto& ctx = *contextFor(kind);
    const auto R = realizationFor(kind);
    for (int i = 0; i <= kind.l; ++i)
      for (int j = i + 1; j <= kind.l; ++j) {
        const int m = order.at(ctx.cartan[i][j] * ctx.cartan[j][i]);
        const auto st = generatorIsometry(*R, i).after(generatorIsometry(*R, j));
        AffineIsometry p = AffineIsometry::identity(kind.l);
        for (int k = 1; k <= m; ++k) {
          p = p.after(st);
          EXPECT_EQ(p == AffineIsometry::identity(kind.l), k == m) << kind.str() << " " << i << "," << j;
        }
      }
  }
}

TEST(Generators, C2ZeroShift) {
  const auto R = realizationFor(kC2);
  EXPECT_EQ(generatorIsometry(*R, 0).shift, (QVector{Quad2::sqrt2(), Quad2(0)}));
}

TEST(Semidirect, Examples) {
  const auto Rc = realizationFor(kC2);
  auto d = semidirect({1}, *Rc);
  EXPECT_EQ(d.q, zeroVector(2));
  EXPECT_EQ(d.finiteWord, (WeylWord{1}));

  d = semidirect({0}, *Rc);
  EXPECT_EQ(d.q, (QVector{Quad2::sqrt2(), Quad2(0)}));
  EXPECT_EQ(d.finiteWord, (WeylWord{1, 2, 1}));

  const auto Rd = realizationFor(kD2);
  d = semidirect({1, 2, 1, 0, 1}, *Rd);
  EXPECT_EQ(d.q, (QVector{-Quad2::sqrt2(), Quad2(0)}));
  EXPECT_EQ(d.finiteWord, (WeylWord{1}));
}

TEST(Semidirect, Recomposes) {
  for (auto kind : kinds(3)) {
    const auto R = realizationFor(kind);
    for (int j = 0; j <= kind.l; ++j)
      for (const auto& c : enumerateCores(kind, j, 10)) {
        const auto d = semidirect(c.word, *R);
        const AffineIsometry t{QMatrix::identity(kind.l), d.q};
        EXPECT_EQ(t.after(wordIsometry(d.finiteWord, *R)), wordIsometry(c.word, *R)) << c.abacus.key();
        EXPECT_NO_THROW(latticeCoords(d.q, *R));
      }
  }
}

TEST(AtomicLength, Examples) {
  const auto& d = *contextFor(kD2);
  EXPECT_EQ(atomicLength(d, 1, {}), 0);
  EXPECT_EQ(atomicLength(d, 1, {1, 2, 1, 0, 1}), 11);
  for (auto kind : kinds())
    for (int j = 0; j <= kind.l; ++j) EXPECT_EQ(atomicLength(*contextFor(kind), j, {j}), 1);
}

TEST(Compat, Examples) {
  for (auto kind : kinds())
    for (int j = 0; j <= kind.l; ++j) {
      const auto r = semidirectCompat(weightAbacus(kind, j));
      EXPECT_EQ(r.lhs, realizationFor(kind)->omegaOrZero(j));
      EXPECT_TRUE(r.holds());
    }
  const auto r = semidirectCompat(fromPartition(kD2, Partition{4, 2, 1, 1, 1, 1, 1}, 1));
  const QVector want{Quad2(-2) * Quad2::sqrt2(), Quad2::sqrt2()};
  EXPECT_EQ(r.lhs, want);
  EXPECT_EQ(r.rhs, want);
}

TEST(Heights, Example) {
  const auto core = fromPartition(kD2, Partition{4, 2, 1, 1, 1, 1, 1}, 1);
  EXPECT_EQ(heightViaRealization(core), 11);
  EXPECT_EQ(nodeHeightsViaRealization(core).k, (std::vector<std::int64_t>{2, 5, 4}));
  for (auto kind : kinds())
    for (int j = 0; j <= kind.l; ++j) EXPECT_EQ(heightViaRealization(weightAbacus(kind, j)), 0);
}

TEST(Heights, AllMethodsAgree) {
  for (auto kind : kinds())
    for (int j = 0; j <= kind.l; ++j)
      for (const auto& c : enumerateCores(kind, j, kind.l == 4 ? 8 : 12)) {
        const auto& ctx = c.abacus.context();
        EXPECT_EQ(atomicLength(ctx, j, c.word), c.beta.height()) << c.abacus.key();
        EXPECT_EQ(heightViaRealization(c.abacus), c.beta.height()) << c.abacus.key();
        EXPECT_EQ(nodeHeightsViaRealization(c.abacus), c.beta) << c.abacus.key();
        EXPECT_TRUE(checkSemidirectCompat(c.abacus)) << c.abacus.key();
      }
}

TEST(Alcoves, Fundamental) {
  const auto& ctx = *contextFor(kC2);
  const auto R = realizationFor(kC2);
  const auto a = alcoveOf({}, ctx, *R);
  const auto f = fundamentalAlcove(ctx, *R);
  EXPECT_EQ(a.vertices, f.vertices);
  EXPECT_EQ(a.vertices[0], zeroVector(2));
  EXPECT_THROW(alcoveOf({}, *contextFor({Family::C1, 3}), *realizationFor({Family::C1, 3})), ScopeError);
}

TEST(Alcoves, ZeroWallNeighbour) {
  const auto& ctx = *contextFor(kC2);
  const auto R = realizationFor(kC2);
  const auto f = fundamentalAlcove(ctx, *R);
  const auto s = alcoveOf({0}, ctx, *R);
  int shared = 0;
  for (auto& v : s.vertices) {
    if (std::find(f.vertices.begin(), f.vertices.end(), v) != f.vertices.end()) {
      ++shared;
      EXPECT_EQ(innerProduct(v, R->highestRoot), Quad2(1));
    }
  }
  EXPECT_EQ(shared, 2);
  EXPECT_GT((innerProduct(s.interior, R->highestRoot) - Quad2(1)).sign(), 0);
}

TEST(Alcoves, TileTheCone) {
  for (auto kind : {kC2, kD2, AffineKind{Family::B1, 2}, AffineKind{Family::A2l_2, 2}, AffineKind{Family::A2lm1_2, 2}})
    for (int j = 0; j <= 2; ++j) {
      const auto& ctx = *contextFor(kind);
      const auto R = realizationFor(kind);
      std::vector<Alcove> al;
      for (const auto& c : enumerateCores(kind, j, 6)) al.push_back(alcoveCoords(c.word, ctx, *R));
      for (std::size_t a = 0; a < al.size(); ++a) {
        EXPECT_TRUE(inTitsCone(al[a].interior, j, ctx, *R)) << kind.str() << " j=" << j;
        EXPECT_TRUE(insideTriangle(al[a].interior, al[a].vertices));
        for (std::size_t b = 0; b < al.size(); ++b)
          if (a != b) {
            EXPECT_FALSE(insideTriangle(al[a].interior, al[b].vertices)) << kind.str() << " j=" << j;
          }
      }
    }
}
