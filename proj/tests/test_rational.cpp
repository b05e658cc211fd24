#include <gtest/gtest.h>

#include <limits>

#include "mirrorpoly/matrix.hpp"

using namespace mirrorpoly;

TEST(Rational, ReducesAndNormalizesSign) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, -5), Rational(0));
  EXPECT_EQ(Rational(0, -5).den(), 1);
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 6) + Rational(5, 18), Rational(4, 9));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, FloorCeilFrac) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-1, 18).frac(), Rational(17, 18));
  EXPECT_EQ(Rational(5).frac(), Rational(0));
}

TEST(Rational, OrderingUsesWideProducts) {
  const Int big = std::numeric_limits<Int>::max() / 2;
  EXPECT_LT(Rational(big - 1, big), Rational(big, big + 1));
  EXPECT_LT(Rational(-1, 3), Rational(-1, 4));
}

TEST(Rational, OverflowThrowsInsteadOfWrapping) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(Rational(big) + Rational(1), OverflowError);
  EXPECT_THROW(Rational(big) * Rational(2), OverflowError);
  EXPECT_THROW(checked::mul(big, big), OverflowError);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("5/18"), Rational(5, 18));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational(5, 18).str(), "5/18");
  EXPECT_EQ(Rational(-3).str(), "-3");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("a/2"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Matrix, DeterminantMatchesLeibnizExpansion) {
  // Leibniz formula over all 24 permutations as an independent oracle.
  const IntMatrix m = IntMatrix::from_rows({{6, 1, 0, 0}, {0, 3, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 18}});
  const IntMatrix n = IntMatrix::from_rows({{2, -1, 3, 0}, {1, 4, -2, 5}, {0, 3, 1, -1}, {7, 0, 2, 2}});
  for (const auto* a : {&m, &n}) {
    int perm[4] = {0, 1, 2, 3};
    Int leibniz = 0;
    do {
      int inversions = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
      Int term = inversions % 2 ? -1 : 1;
      for (int i = 0; i < 4; ++i) term *= (*a)(i, static_cast<std::size_t>(perm[i]));
      leibniz += term;
    } while (std::next_permutation(perm, perm + 4));
    EXPECT_EQ(determinant(*a), leibniz);
  }
  EXPECT_EQ(determinant(m), 648);
}

TEST(Matrix, InverseTimesMatrixIsIdentity) {
  const RatMatrix a = to_rational(IntMatrix::from_rows({{6, 0, 0}, {1, 3, 0}, {0, 0, 2}}));
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, RatMatrix::identity(3));
  EXPECT_FALSE(inverse(to_rational(IntMatrix::from_rows({{1, 2}, {2, 4}}))));
}

TEST(Matrix, NullspaceAndSpanSolve) {
  const RatMatrix m = to_rational(IntMatrix::from_rows({{3, 5, 9, 1}}));
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 3u);
  for (const auto& v : ns) EXPECT_TRUE(dot(std::span<const Rational>(m.row_vec(0)), std::span<const Rational>(v)).is_zero());
  const RatMatrix basis = to_rational(IntMatrix::from_rows({{1, 0, 2}, {0, 1, 3}}));
  auto x = solve_in_row_span(basis, RatVec{2, 3, 13});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RatVec{2, 3}));
  EXPECT_FALSE(solve_in_row_span(basis, RatVec{0, 0, 1}));
}
