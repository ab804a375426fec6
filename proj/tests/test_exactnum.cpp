#include <gtest/gtest.h>

#include "affcore/exactnum.hpp"

using namespace affcore;

TEST(Rational, LowestTermsPositiveDenominator) {
  EXPECT_EQ(rat(4, -6), rat(-2, 3));
  EXPECT_EQ(str(rat(4, -6)), "-2/3");
  EXPECT_TRUE(isInteger(rat(6, 3)));
  EXPECT_FALSE(isInteger(rat(5, 2)));
  EXPECT_THROW(rat(1, 0), DomainError);
}

TEST(Quad2, SqrtTwoSquaresToTwo) {
  const Quad2 s = Quad2::sqrt2();
  EXPECT_EQ(s * s, Quad2(2));
  EXPECT_EQ((Quad2(1) + s) * (Quad2(1) - s), Quad2(-1));
}

TEST(Quad2, ExactSign) {
  EXPECT_EQ(Quad2(rat(3), rat(-2)).sign(), 1);   // 3 - 2.828
  EXPECT_EQ(Quad2(rat(-3), rat(2)).sign(), -1);
  EXPECT_EQ(Quad2(rat(7, 5), rat(-1)).sign(), -1);  // 1.4 < sqrt2
  EXPECT_EQ(Quad2(rat(0), rat(0)).sign(), 0);
  EXPECT_EQ(Quad2(rat(2), rat(1)).sign(), 1);
}

TEST(InnerProduct, Examples) {
  const QVector x{Quad2(1), Quad2::sqrt2()};
  EXPECT_EQ(innerProduct(x, x), Quad2(3));
  const QVector u = Quad2::sqrt2() * QVector{Quad2(-2), Quad2(1)};
  EXPECT_EQ(innerProduct(u, u), Quad2(10));
  EXPECT_EQ(innerProduct(zeroVector(2), u), Quad2(0));
  EXPECT_THROW(innerProduct(zeroVector(3), u), DimensionError);
}

TEST(InnerProduct, Bilinear) {
  const QVector a{Quad2(rat(1, 2)), Quad2(rat(0), rat(3))}, b{Quad2(rat(-4)), Quad2(rat(1), rat(1))};
  const QVector c{Quad2(rat(7)), Quad2(rat(2, 3))};
  EXPECT_EQ(innerProduct(a + b, c), innerProduct(a, c) + innerProduct(b, c));
  EXPECT_EQ(innerProduct(Quad2::sqrt2() * a, c), Quad2::sqrt2() * innerProduct(a, c));
  EXPECT_EQ(innerProduct(a, b), innerProduct(b, a));
}

TEST(Quad2, RationalIntegerTest) {
  EXPECT_EQ(isRationalInteger(Quad2(3)), BigInt(3));
  EXPECT_FALSE(isRationalInteger(Quad2::sqrt2()));
  EXPECT_FALSE(isRationalInteger(Quad2(rat(5, 2))));
  EXPECT_EQ(isRational(Quad2(rat(5, 2))), rat(5, 2));
  EXPECT_FALSE(isRational(Quad2::sqrt2()));
}

TEST(Quad2, Division) {
  const Quad2 x(rat(3), rat(1, 2));
  const Quad2 y(rat(-1), rat(2));
  EXPECT_EQ((x / y) * y, x);
}

TEST(CheckedArithmetic, Overflow) {
  EXPECT_EQ(checkedMul(1 << 20, 1 << 20), std::int64_t(1) << 40);
  EXPECT_THROW(checkedMul(INT64_MAX / 2, 3), std::overflow_error);
  EXPECT_THROW(checkedAdd(INT64_MAX, 1), std::overflow_error);
}

TEST(QMatrix, SolveAndIdentity) {
  QMatrix m = QMatrix::identity(2);
  EXPECT_TRUE(m.isIdentity());
  m(0, 1) = Quad2::sqrt2();
  const QVector rhs{Quad2(1), Quad2(2)};
  EXPECT_EQ(m.apply(m.solve(rhs)), rhs);
}
