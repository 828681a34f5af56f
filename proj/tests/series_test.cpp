#include <gtest/gtest.h>

#include <sstream>

#include "xsh/properties.hpp"
#include "xsh/series.hpp"

using namespace xsh;

TEST(Series, JamesSplittingOfTheTwoSphere) {
  const auto s = tensor_algebra_series(space_series({0, 1}, 2, 10));
  EXPECT_EQ(s.coeffs, std::vector<mpz_class>(11, 1));
  // one class in degree 2: ones in even degrees
  EXPECT_EQ(to_string(tensor_algebra_series(space_series({0, 0, 1}, 0, 6))), "1,0,1,0,1,0,1");
}

TEST(Series, SnaithSplittingOfTheCircle) {
  // H_*(QS^1; F_2): polynomial on generators in degrees 1,3,4,5,6
  EXPECT_EQ(to_string(snaith_series({0, 1}, 2, 6)), "1,1,1,2,3,4,6");
  // rationally only the weight-one class survives
  EXPECT_EQ(to_string(snaith_series({0, 1}, 0, 4)), "1,1,0,0,0");
}

TEST(Series, SnaithGuard) {
  EXPECT_THROW(snaith_series({0, 1}, 2, 8), resource_error);
  EXPECT_THROW(snaith_series({1}, 2, 3), argument_error);
}

TEST(Series, QuotientInvertsProduct) {
  const auto r = check_series_roundtrip(300, 41);
  EXPECT_TRUE(r.passed()) << r.first_failure;
  const PoincareSeries a(2, 3, {1, 0, 0, 0}), b(2, 3, {1, 2, 0, 0});
  EXPECT_THROW(split_quotient(a, b), validation_error);
  EXPECT_THROW(multiply(a, PoincareSeries(3, 3, {1})), argument_error);
}

TEST(Series, CsvRoundTrip) {
  const PoincareSeries s(3, 4, {1, 2, 0, 5, 7});
  std::stringstream ss;
  write_series_csv(ss, s);
  EXPECT_EQ(read_series_csv(ss), s);
  std::stringstream bad("degree,coefficient\n0,1\n1,x\n");
  EXPECT_THROW(read_series_csv(bad), parse_error);
}

TEST(Series, ReducedDimensions) {
  EXPECT_EQ(parse_reduced_dims("1:1,3:2"), (std::vector<int>{0, 1, 0, 2}));
  EXPECT_THROW(parse_reduced_dims("1-1"), parse_error);
  EXPECT_THROW(parse_reduced_dims("1:x"), parse_error);
}
