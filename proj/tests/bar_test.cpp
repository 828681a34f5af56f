#include <gtest/gtest.h>

#include "xsh/bar.hpp"
#include "xsh/properties.hpp"

using namespace xsh;

TEST(Bar, FunctorialInEveryCategory) {
  const auto R = group_algebra(Ring::prime(2), cyclic_group(2));
  for (auto cat : {Category::cyclic, Category::symmetric, Category::braided}) {
    const BarFunctor<PrimeField> B(PrimeField(2), R, cat);
    const auto r = check_functoriality(B, 200, 31, 3);
    EXPECT_TRUE(r.passed()) << to_string(cat) << ": " << r.first_failure;
  }
}

TEST(Bar, NoncommutativeFunctoriality) {
  const BarFunctor<PrimeField> B(PrimeField(2), matrix_algebra(Ring::prime(2), 2), Category::symmetric);
  const auto r = check_functoriality(B, 100, 32, 2);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Bar, CyclicFacesAgreeWithDuality) {
  const BarFunctor<RationalField> B(RationalField(), dual_numbers(Ring::rationals()), Category::cyclic);
  const auto r = check_cyclic_face_routes(B, 4);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Bar, HochschildDifferentialSquaresToZero) {
  const BarFunctor<PrimeField> B(PrimeField(3), truncated_poly(Ring::prime(3), 3), Category::cyclic);
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE((hochschild_differential(B, n - 1) * hochschild_differential(B, n)).is_zero());
}

TEST(Bar, BraidsActThroughPermutations) {
  const BarFunctor<PrimeField> B(PrimeField(2), matrix_algebra(Ring::prime(2), 2), Category::braided);
  const auto t = x_transposition(Category::braided, 0, 1);
  const auto tinv = x_transposition(Category::braided, 0, 1, true);
  EXPECT_TRUE(B.map(t) == B.map(tinv));
  EXPECT_EQ(B.object_dim(2), 64);
}
