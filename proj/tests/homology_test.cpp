#include <gtest/gtest.h>

#include "xsh/homology.hpp"

using namespace xsh;

std::vector<int> dims(const std::vector<HomologyGroup>& h) {
  std::vector<int> out;
  for (const auto& g : h) out.push_back(g.dim);
  return out;
}

TEST(Hochschild, DualNumbersInCharacteristicThree) {
  EXPECT_EQ(dims(hochschild(dual_numbers(Ring::prime(3)), 4)), (std::vector<int>{2, 1, 1, 1, 1}));
}

TEST(Hochschild, LowDegreesMatchClassicalInvariants) {
  for (const auto& R : {group_algebra(Ring::prime(2), symmetric_group(3)), matrix_algebra(Ring::prime(2), 2),
                        truncated_poly(Ring::prime(3), 3)}) {
    const auto h = hochschild(R, 1);
    EXPECT_EQ(h[0].dim, commutator_quotient_dim(R)) << R.name();
    if (R.is_commutative()) {
      EXPECT_EQ(h[1].dim, kahler_differentials_dim(R)) << R.name();
    }
  }
  EXPECT_EQ(dims(hochschild(group_algebra(Ring::prime(2), symmetric_group(3)), 2)), (std::vector<int>{3, 2, 2}));
}

TEST(Hochschild, IntegralTorsion) {
  const auto h = hochschild(truncated_poly(Ring::integers(), 3), 2);
  EXPECT_EQ(to_string(h[0]), "Z^3");
  EXPECT_EQ(to_string(h[1]), "Z^2 + Z/3");
  EXPECT_EQ(to_string(h[2]), "Z^2");
}

TEST(Hochschild, GuardsDenseIntegerWork) {
  EXPECT_THROW(hochschild(matrix_algebra(Ring::integers(), 3), 2), resource_error);
}

TEST(Hsigma0, MatrixRingsVanish) {
  for (int n : {2, 3}) {
    const auto h = hsigma0(matrix_algebra(Ring::integers(), n));
    EXPECT_EQ(h.dim, 0);
    EXPECT_TRUE(h.torsion.empty());
  }
}

TEST(Hsigma0, CommutativeAlgebrasAreUnchanged) {
  for (const auto& R : {truncated_poly(Ring::integers(), 3), dual_numbers(Ring::rationals()),
                        group_algebra(Ring::prime(3), cyclic_group(4))}) {
    const auto h = hsigma0(R);
    EXPECT_EQ(h.dim, R.dim()) << R.name();
    EXPECT_EQ(h.ideal_rank, 0);
  }
}

TEST(Hsigma0, GroupAlgebraOfS3) {
  // the quotient is F_2[C_2]
  const auto h = hsigma0(group_algebra(Ring::prime(2), symmetric_group(3)));
  EXPECT_EQ(h.dim, 2);
  EXPECT_TRUE(h.two_sided_verified);
}

TEST(Hsigma0, IntegralTorsionSurvives) {
  // Z[S_3] / commutator ideal = Z[C_2], no torsion
  const auto h = hsigma0(group_algebra(Ring::integers(), symmetric_group(3)));
  EXPECT_EQ(h.dim, 2);
  EXPECT_TRUE(h.torsion.empty());
}
