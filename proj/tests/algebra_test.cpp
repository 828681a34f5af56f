#include <gtest/gtest.h>

#include "xsh/algebra_io.hpp"

using namespace xsh;

TEST(Algebra, StandardFamiliesValidate) {
  EXPECT_EQ(matrix_algebra(Ring::integers(), 3).dim(), 9);
  EXPECT_FALSE(matrix_algebra(Ring::prime(2), 2).is_commutative());
  EXPECT_TRUE(truncated_poly(Ring::prime(3), 4).is_commutative());
  EXPECT_EQ(group_algebra(Ring::prime(2), symmetric_group(3)).dim(), 6);
  EXPECT_FALSE(group_algebra(Ring::prime(2), symmetric_group(3)).is_commutative());
  EXPECT_EQ(direct_sum(dual_numbers(Ring::rationals()), ground_algebra(Ring::rationals())).dim(), 3);
}

TEST(Algebra, RejectsNonAssociativeTables) {
  // e0 unit, e1*e1 = e0 + e1 is fine; e1*e1 = e0, e1*e0 = 2 e1 breaks the unit law
  EXPECT_THROW(Algebra(Ring::rationals(), 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 2}, {1, 1, 0, 1}}, {1, 0}),
               validation_error);
}

TEST(Algebra, JsonRoundTrip) {
  const auto a = group_algebra(Ring::prime(3), cyclic_group(4), "F_3[C_4]");
  const auto b = algebra_from_json(algebra_to_json(a));
  EXPECT_EQ(b.dim(), a.dim());
  EXPECT_EQ(b.constants(), a.constants());
  EXPECT_EQ(b.name(), "F_3[C_4]");
}

TEST(Algebra, MalformedDocuments) {
  EXPECT_THROW(parse_algebra("{not json"), parse_error);
  EXPECT_THROW(parse_algebra(R"({"ring":"Q","dim":1})"), parse_error);
  EXPECT_THROW(parse_algebra(R"({"ring":"Q","dim":1,"constants":[[0,0,0,1]]})"), validation_error);
  EXPECT_THROW(parse_algebra(R"({"ring":"Fp:4","dim":1,"unit":[1],"constants":[[0,0,0,1]]})"), std::exception);
  EXPECT_THROW(parse_algebra(R"({"ring":"Q","dim":1,"unit":[1],"constants":[[0,0,0,"x"]]})"), parse_error);
}

TEST(Algebra, Groups) {
  const auto s3 = symmetric_group(3);
  EXPECT_EQ(s3.order(), 6);
  for (int g = 0; g < 6; ++g) EXPECT_EQ(s3(g, s3.inverse(g)), s3.identity);
  EXPECT_THROW(make_group({{0, 1}, {0, 1}}), std::exception);
}
