#include <gtest/gtest.h>

#include "xsh/group_homology.hpp"

using namespace xsh;

TEST(GroupHomology, CyclicOfOrderTwo) {
  const PrimeField f2(2);
  const auto M = GModule<PrimeField>::trivial(f2, cyclic_group(2));
  EXPECT_EQ(group_homology(M, 5), (std::vector<int>{1, 1, 1, 1, 1, 1}));
  const PrimeField f3(3);
  EXPECT_EQ(group_homology(GModule<PrimeField>::trivial(f3, cyclic_group(2)), 3), (std::vector<int>{1, 0, 0, 0}));
}

TEST(GroupHomology, SymmetricGroupMod3) {
  const PrimeField f3(3);
  const auto M = GModule<PrimeField>::trivial(f3, symmetric_group(3));
  EXPECT_EQ(group_homology(M, 4), (std::vector<int>{1, 0, 0, 1, 1}));
}

TEST(GroupHomology, RationalCoefficientsAreCoinvariants) {
  const RationalField q;
  const auto M = tensor_power_module(q, {1, 1}, 2, 2);  // V = Q^2 in degree 1, V^{(x)2}
  EXPECT_EQ(M.dim(), 4);
  const auto h = group_homology(M, 2);
  // odd classes anticommute: coinvariants are the exterior square
  EXPECT_EQ(h, (std::vector<int>{1, 0, 0}));
}

TEST(GroupHomology, KoszulSigns) {
  const PrimeField f3(3);
  const auto sw = graded_perm_action(f3, {1}, 2, 2, Permutation::transposition(2, 0, 1));
  EXPECT_EQ(sw.at(0, 0), f3.neg(f3.one()));
  const auto even = graded_perm_action(f3, {2}, 2, 4, Permutation::transposition(2, 0, 1));
  EXPECT_EQ(even.at(0, 0), f3.one());
}

TEST(GroupHomology, ActionIsValidated) {
  const PrimeField f2(2);
  auto g = cyclic_group(3);
  std::vector<SparseMatrix<PrimeField>> bad(3, SparseMatrix<PrimeField>::identity(f2, 2));
  bad[1] = SparseMatrix<PrimeField>::from_triplets(f2, 2, 2, {{0, 1, 1}, {1, 0, 1}});
  EXPECT_THROW(GModule<PrimeField>(g, 2, bad), validation_error);
}

TEST(GroupHomology, ResourceGuard) {
  const PrimeField f2(2);
  const auto M = GModule<PrimeField>::trivial(f2, symmetric_group(5));
  EXPECT_THROW(group_homology(M, 4), resource_error);
}
