#include <gtest/gtest.h>

#include "xsh/braid.hpp"
#include "xsh/properties.hpp"

using namespace xsh;

TEST(Braid, ArtinRelations) {
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i + 1 < n; ++i) {
      const auto a = Braid::generator(n, i), b = Braid::generator(n, i + 1);
      EXPECT_TRUE(braid_eq(a * b * a, b * a * b));
    }
  const auto s1 = Braid::generator(4, 1), s3 = Braid::generator(4, 3);
  EXPECT_TRUE(braid_eq(s1 * s3, s3 * s1));
}

TEST(Braid, DetectsNontrivialWords) {
  const auto s1 = Braid::generator(3, 1);
  EXPECT_FALSE(braid_eq(s1, s1.inverse()));
  EXPECT_FALSE(braid_eq(s1 * s1, Braid::identity(3)));
  EXPECT_TRUE(braid_eq(s1 * s1.inverse(), Braid::identity(3)));
  // pure braid with trivial permutation but nontrivial in B_3
  const auto s2 = Braid::generator(3, 2);
  const auto c = s1 * s2 * s1.inverse() * s2.inverse();
  EXPECT_FALSE(braid_eq(c * c, Braid::identity(3)));
}

TEST(Braid, ProjectionAndLifts) {
  const Permutation p({2, 0, 3, 1});
  EXPECT_EQ(project(permutation_braid(p)), p);
  EXPECT_EQ(project(Braid::generator(3, 1)), Permutation::transposition(3, 0, 1));
}

TEST(Braid, ParseRoundTrip) {
  const Braid b(4, {1, -2, 3, 3});
  EXPECT_TRUE(parse_braid(to_string(b)).same_word(b));
  EXPECT_THROW(parse_braid("garbage"), parse_error);
  EXPECT_THROW(Braid(3, {3}), argument_error);
}

TEST(Braid, CablingContracts) {
  const auto r = check_cable_contracts(300, 7);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}
