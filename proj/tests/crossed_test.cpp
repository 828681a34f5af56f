#include <gtest/gtest.h>

#include "xsh/crossed.hpp"
#include "xsh/properties.hpp"
#include "xsh/relations.hpp"

using namespace xsh;

class CategoryTest : public ::testing::TestWithParam<Category> {};

TEST_P(CategoryTest, RelationsHold) {
  for (const auto& r : verify_relations(GetParam(), 4)) EXPECT_TRUE(r.passed()) << r.relation << " " << r.instance;
}

TEST_P(CategoryTest, CompositionIsAssociative) {
  const auto r = check_associativity(GetParam(), 2000, 11);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST_P(CategoryTest, Factorization) {
  const auto r = check_factorization(GetParam(), 500, 12);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

INSTANTIATE_TEST_SUITE_P(All, CategoryTest,
                         ::testing::Values(Category::cyclic, Category::symmetric, Category::braided),
                         [](const auto& info) { return to_string(info.param); });

TEST(Crossed, ProjectionIsAFunctor) {
  const auto r = check_projection_functor(1000, 13);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Crossed, BraidedTranspositionHasInfiniteOrder) {
  const auto t = x_transposition(Category::braided, 0, 1);
  EXPECT_FALSE(xequal(xcompose(t, t), XMorphism::identity(Category::braided, 1)));
  const auto s = x_transposition(Category::symmetric, 0, 1);
  EXPECT_TRUE(xequal(xcompose(s, s), XMorphism::identity(Category::symmetric, 1)));
}

TEST(Crossed, CyclicGeneratorHasOrderNPlusOne) {
  for (int n = 0; n <= 5; ++n) {
    auto acc = XMorphism::identity(Category::cyclic, n);
    for (int k = 0; k <= n; ++k) acc = xcompose(x_cyclic(n), acc);
    EXPECT_TRUE(xequal(acc, XMorphism::identity(Category::cyclic, n)));
  }
}

TEST(Crossed, Duality) {
  const auto table = check_duality_table(5);
  EXPECT_TRUE(table.passed()) << table.first_failure;
  const auto f = check_duality_functoriality(500, 14);
  EXPECT_TRUE(f.passed()) << f.first_failure;
}

TEST(Crossed, WordsParse) {
  const auto f = parse_xword(Category::symmetric, "d1 t0 s0", 2);
  EXPECT_EQ(f.source_rank(), 2);
  EXPECT_EQ(f.target_rank(), 2);
  EXPECT_THROW(parse_xword(Category::cyclic, "t0", 2), std::exception);
  EXPECT_THROW(parse_category("simplicial"), std::exception);
}
