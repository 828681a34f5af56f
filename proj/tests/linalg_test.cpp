#include <gtest/gtest.h>

#include "xsh/chain_complex.hpp"
#include "xsh/linalg.hpp"

using namespace xsh;

TEST(Linalg, RankOverPrimeFields) {
  // [[1,1],[1,1]] has rank 1; [[1,2],[3,4]] has rank 1 mod 2 and 2 mod 5
  auto m = SparseMatrix<PrimeField>::from_triplets(PrimeField(2), 2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  EXPECT_EQ(rank(m), 1);
  auto a2 = SparseMatrix<PrimeField>::from_triplets(PrimeField(2), 2, 2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_EQ(rank(a2), 1);
  PrimeField f5(5);
  auto a5 = SparseMatrix<PrimeField>::from_triplets(f5, 2, 2, {{0, 0, 1}, {0, 1, 2}, {1, 0, 3}, {1, 1, 4}});
  EXPECT_EQ(rank(a5), 2);
}

TEST(Linalg, SmithNormalForm) {
  const auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto s = smith_normal_form(m);
  ASSERT_EQ(s.invariants.size(), 3u);
  EXPECT_EQ(s.invariants[0], 2);
  EXPECT_EQ(s.invariants[1], 6);
  EXPECT_EQ(s.invariants[2], 12);
  EXPECT_TRUE(s.U * m * s.V == s.D);
}

TEST(Linalg, LatticeQuotient) {
  // Z^3 / <(2,0,0),(0,3,0)> = Z + Z/2 + Z/3 = Z + Z/6
  const std::vector<std::vector<mpz_class>> rows{{2, 0, 0}, {0, 3, 0}};
  const auto g = lattice_quotient(rows, 3);
  EXPECT_EQ(g.free_rank, 1);
  EXPECT_EQ(to_string(g), "Z + Z/6");
  EXPECT_EQ(to_string(AbelianGroup{}), "0");
}

TEST(Linalg, ChainComplexHomology) {
  // circle: two vertices, two edges
  PrimeField f(2);
  auto d1 = SparseMatrix<PrimeField>::from_triplets(f, 2, 2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  ChainComplex<PrimeField> c(f, {2, 2}, {d1});
  EXPECT_EQ(c.homology(0).dim, 1);
  EXPECT_EQ(c.homology(1).dim, 1);
  auto bad = SparseMatrix<PrimeField>::from_triplets(f, 1, 1, {{0, 0, 1}});
  EXPECT_THROW(ChainComplex<PrimeField>(f, {1, 1, 1}, {bad, bad}), std::exception);
}
