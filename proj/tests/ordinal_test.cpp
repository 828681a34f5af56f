#include <gtest/gtest.h>

#include "xsh/ordinal.hpp"

using namespace xsh;

TEST(Ordinal, CosimplicialIdentities) {
  for (int n = 2; n <= 5; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        EXPECT_EQ(compose(face(j, n), face(i, n - 1)), compose(face(i, n), face(j - 1, n - 1))) << n << " " << i << " " << j;
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i < n; ++i) {
      EXPECT_TRUE(compose(degeneracy(i, n - 1), face(i, n)).is_identity());
      EXPECT_TRUE(compose(degeneracy(i, n - 1), face(i + 1, n)).is_identity());
    }
}

TEST(Ordinal, NormalFormRoundTrip) {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const auto& f : all_ordinal_maps(m, n)) EXPECT_EQ(recompose(normal_form(f), m), f) << to_literal(f);
}

TEST(Ordinal, CountsAreBinomials) {
  // maps [m] -> [n] are multisets of size m+1 from n+1 values
  EXPECT_EQ(count_ordinal_maps(2, 2), 10u);
  EXPECT_EQ(count_ordinal_maps(3, 1), 5u);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(all_ordinal_maps(m, n).size(), count_ordinal_maps(m, n));
}

TEST(Ordinal, LiteralsAndWords) {
  const OrdinalMap f(3, 2, {0, 0, 2, 2});
  EXPECT_EQ(to_literal(f), "[0 0 2 2]");
  EXPECT_EQ(parse_literal(to_literal(f)), f);
  EXPECT_EQ(parse_literal("[0 0]:3"), OrdinalMap(1, 3, {0, 0}));
  EXPECT_EQ(parse_literal("[0 1 1]"), OrdinalMap(2, 1, {0, 1, 1}));
  EXPECT_EQ(parse_word(to_word(f), 3), f);
  EXPECT_THROW(parse_literal("0 1"), parse_error);
  EXPECT_THROW(OrdinalMap(1, 1, {1, 0}), argument_error);
}

TEST(Ordinal, FiberSizes) {
  const OrdinalMap f(3, 2, {0, 0, 2, 2});
  EXPECT_EQ(f.fiber_sizes(), (std::vector<int>{2, 0, 2}));
  const std::vector<int> sizes{1, 2, 1};
  EXPECT_EQ(OrdinalMap::from_fiber_sizes(sizes), OrdinalMap(3, 2, {0, 1, 1, 2}));
}
