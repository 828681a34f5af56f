#include <gtest/gtest.h>

#include "xsh/e2op.hpp"
#include "xsh/properties.hpp"

using namespace xsh;

TEST(E2, BraidedMonoidalStructure) {
  const auto checks = check_braided_monoidal(2);
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.kind << " " << c.instance;
}

TEST(E2, OperadLaws) {
  const auto r = check_e2_patterns(4, 2, 21);
  EXPECT_GT(r.trials, 0);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(E2, ObjectCompositionBlocks) {
  // sigma = (1 0) on blocks of sizes 2 and 1
  const Permutation sigma({1, 0});
  const std::vector<Permutation> taus{Permutation::identity(2), Permutation::identity(1)};
  const auto c = e2_compose_objects(sigma, taus);
  EXPECT_EQ(c.size(), 3);
  EXPECT_EQ(c, block_perm(sigma, std::vector<int>{2, 1}));
}

TEST(E2, TargetFollowsBraid) {
  const E2Morphism f(Permutation::identity(3), Braid::generator(3, 1));
  EXPECT_EQ(f.target(), Permutation::transposition(3, 0, 1));
  EXPECT_THROW(E2Morphism(Permutation::identity(2), Braid::identity(3)), argument_error);
}
