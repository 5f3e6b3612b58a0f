#include <gtest/gtest.h>

#include "skewmori/errors.hpp"
#include "skewmori/exact.hpp"
#include "test_util.hpp"

using namespace skewmori;
using skewmori::testutil::v;

TEST(Exact, PrimitiveClearsDenominatorsAndGcd) {
  ExactVector x{mpq_class(1, 2), mpq_class(-3, 4), 0};
  EXPECT_EQ(to_string(primitive(x)), "(2,-3,0)");
  EXPECT_EQ(to_string(primitive(v({4, -6, 8}))), "(2,-3,4)");
  EXPECT_EQ(to_string(primitive(v({0, 0}))), "(0,0)");
}

TEST(Exact, RankDeterminantInverse) {
  auto m = ExactMatrix::from_rows({v({2, 1, 0}), v({1, 3, 1}), v({0, 1, 4})}, 3);
  EXPECT_EQ(rank(m), 3u);
  EXPECT_EQ(determinant(m), 18);
  auto inv = inverse(m);
  EXPECT_EQ(m * inv, ExactMatrix::identity(3));
  auto singular = ExactMatrix::from_rows({v({1, 2}), v({2, 4})}, 2);
  EXPECT_EQ(rank(singular), 1u);
  EXPECT_EQ(determinant(singular), 0);
  EXPECT_THROW(inverse(singular), DomainError);
}

TEST(Exact, KernelAndSolve) {
  auto m = ExactMatrix::from_rows({v({1, 1, 1}), v({1, -1, 0})}, 3);
  auto ker = kernel_basis(m);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(is_zero(m * ker[0]));
  ExactVector x;
  ASSERT_TRUE(solve(m, v({3, 1}), x));
  EXPECT_EQ(m * x, v({3, 1}));
  auto bad = ExactMatrix::from_rows({v({1, 1}), v({1, 1})}, 2);
  EXPECT_FALSE(solve(bad, v({1, 2}), x));
}

TEST(Exact, RrefPivots) {
  std::vector<std::size_t> piv;
  auto r = rref(ExactMatrix::from_rows({v({0, 2, 4}), v({1, 1, 1})}, 3), &piv);
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.row(0), v({1, 0, -1}));
  EXPECT_EQ(r.row(1), v({0, 1, 2}));
}

TEST(Exact, Int64Overflow) {
  IntVector big{mpz_class("100000000000000000000")};
  EXPECT_THROW(to_int64(big), DomainError);
  EXPECT_EQ(to_int64(IntVector{mpz_class(-5)}), (std::vector<std::int64_t>{-5}));
}
