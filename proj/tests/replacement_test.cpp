#include <gtest/gtest.h>

#include "xsh/homology.hpp"
#include "xsh/replacement.hpp"

using namespace xsh;

TEST(Replacement, HomCounts) {
  // |Hom([m],[n])| = |Delta([m],[n])| * |G_m|
  EXPECT_EQ(hom_count(Category::symmetric, 1, 1), 6u);
  EXPECT_EQ(hom_count(Category::cyclic, 2, 1), 12u);
  const MorphismIndex I(Category::symmetric, 2);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(I.homs(m, n).size(), hom_count(Category::symmetric, m, n));
}

TEST(Replacement, ChainCountsMatchEnumeration) {
  const auto R = dual_numbers(Ring::prime(2));
  const auto rc = build_replacement_over(PrimeField(2), R, Category::symmetric, 1, 2);
  const auto k = count_chains(Category::symmetric, 1, 2, R.dim());
  for (int p = 0; p <= 2; ++p) {
    EXPECT_EQ(static_cast<long double>(rc.chains[p].size()), k.chains[p]);
    EXPECT_EQ(static_cast<long double>(rc.complex.dim(p)), k.cells[p]);
  }
}

TEST(Replacement, DegreeZeroStabilizes) {
  const auto m2 = matrix_algebra(Ring::prime(2), 2);
  const auto s3 = group_algebra(Ring::prime(2), symmetric_group(3));
  for (auto cat : {Category::symmetric, Category::braided}) {
    EXPECT_EQ(truncated_homology(m2, cat, 0, {0, 1, 2, 3}).dims, (std::vector<int>{4, 1, 0, 0}));
    const auto t = truncated_homology(s3, cat, 0, {0, 1, 2, 3});
    EXPECT_EQ(t.dims, (std::vector<int>{6, 3, 2, 2}));
    EXPECT_TRUE(t.stabilized);
    EXPECT_EQ(t.dims.back(), hsigma0(s3).dim);
  }
  // the cyclic category recovers HH_0
  EXPECT_EQ(truncated_homology(s3, Category::cyclic, 0, {3}).dims.front(), hochschild(s3, 0)[0].dim);
}

TEST(Replacement, GeneratorShortcutMatchesFullDifferential) {
  const auto R = group_algebra(Ring::prime(2), cyclic_group(2));
  for (auto cat : {Category::cyclic, Category::symmetric}) {
    const auto full = build_replacement_over(PrimeField(2), R, cat, 2, 1);
    EXPECT_EQ(full.complex.homology(0).dim, replacement_h0_dim(PrimeField(2), R, cat, 2));
  }
}

TEST(Replacement, GroundFieldHigherDegrees) {
  const auto k = ground_algebra(Ring::prime(2));
  EXPECT_EQ(truncated_homology(k, Category::symmetric, 1, {1, 2}).dims, (std::vector<int>{0, 0}));
}

TEST(Replacement, BraidToSymmetricComparison) {
  for (const auto& R : {dual_numbers(Ring::prime(2)), matrix_algebra(Ring::prime(2), 2)}) {
    const auto c = braid_to_sym_comparison(R, 2, 1);
    EXPECT_TRUE(c.commutes) << R.name();
    EXPECT_TRUE(c.h0_iso) << R.name();
    EXPECT_EQ(c.h0_braid, c.h0_sym);
  }
}

TEST(Replacement, RejectsIntegersAndLargeTruncations) {
  EXPECT_THROW(truncated_homology(ground_algebra(Ring::integers()), Category::symmetric, 0, {1}), argument_error);
  EXPECT_THROW(truncated_homology(ground_algebra(Ring::prime(2)), Category::symmetric, 0, {9}), resource_error);
  EXPECT_THROW(build_replacement_over(PrimeField(2), matrix_algebra(Ring::prime(2), 2), Category::braided, 4, 3),
               resource_error);
}
