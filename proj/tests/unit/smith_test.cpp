#include "oracles.hpp"

#include "wordhom/smith.hpp"

#include <gtest/gtest.h>

namespace wordhom {
namespace {

using testing::Dense;
using testing::dense_smith_oracle;

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

SparseIntMatrix random_sparse(std::mt19937_64& rng, std::size_t max_dim, double density, int range) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> val(-range, range);
  const std::size_t rows = dim(rng), cols = dim(rng);
  std::vector<MatrixEntry> e;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (u(rng) < density) e.push_back({r, c, val(rng)});
  return SparseIntMatrix::from_triplets(rows, cols, std::move(e));
}

std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(Smith, HandExample) {
  auto m = SparseIntMatrix::from_dense({{2, 4}, {6, 8}});
  EXPECT_EQ(smith_normal_form(m), ints({2, 4}));
  EXPECT_EQ(dense_smith_oracle(m.to_dense()), ints({2, 4}));
}

TEST(Smith, ZeroAndIdentity) {
  EXPECT_TRUE(smith_normal_form(SparseIntMatrix(4, 3)).empty());
  EXPECT_EQ(smith_normal_form(SparseIntMatrix::identity(3)), ints({1, 1, 1}));
  EXPECT_TRUE(smith_normal_form(SparseIntMatrix(0, 5)).empty());
}

TEST(Smith, TorsionFromNonUnitEntries) {
  // diag(2,3) ~ diag(1,6); [[2,0],[0,4]] stays
  EXPECT_EQ(smith_normal_form(SparseIntMatrix::from_dense({{2, 0}, {0, 3}})), ints({1, 6}));
  EXPECT_EQ(smith_normal_form(SparseIntMatrix::from_dense({{2, 0}, {0, 4}})), ints({2, 4}));
  EXPECT_EQ(smith_normal_form(SparseIntMatrix::from_dense({{6, 10, 15}})), ints({1}));
}

TEST(Smith, DiagonalInvariantFactors) {
  EXPECT_EQ(diagonal_invariant_factors(ints({4, 6, 1, 10})), ints({1, 2, 2, 60}));
  EXPECT_EQ(diagonal_invariant_factors(ints({-3, 0, 9})), ints({3, 9}));
}

TEST(Smith, MatchesDenseOracleOnRandomMatrices) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = random_sparse(rng, 12, 0.35, 6);
    ASSERT_EQ(smith_normal_form(m), dense_smith_oracle(m.to_dense())) << "trial " << trial;
  }
}

TEST(Smith, DivisibilityChainAndPermutationInvariance) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_sparse(rng, 50, 0.08, 3);
    auto f = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) ASSERT_EQ(f[i + 1] % f[i], 0);
    for (const auto& v : f) ASSERT_GT(v, 0);
    auto pm = m.permuted(random_perm(rng, m.rows()), random_perm(rng, m.cols()));
    ASSERT_EQ(smith_normal_form(pm), f);
  }
}

TEST(Smith, RankAgreesWithModularRanks) {
  std::mt19937_64 rng(5);
  const std::uint32_t primes[] = {10007, 10009, 10037, 10039, 10061};
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_sparse(rng, 40, 0.1, 4);
    auto f = smith_normal_form(m);
    int checked = 0;
    for (std::uint32_t p : primes) {
      bool divides = false;
      for (const auto& v : f) divides = divides || v % p == 0;
      if (divides) continue;
      ASSERT_EQ(rank_mod(m, p), f.size());
      ++checked;
    }
    ASSERT_GE(checked, 3);
  }
}

TEST(Smith, ModularRankDropsAtTorsionPrime) {
  auto m = SparseIntMatrix::from_dense({{2, 0}, {0, 1}});
  EXPECT_EQ(rank_mod(m, 2), 1u);
  EXPECT_EQ(rank_mod(m, 3), 2u);
}

TEST(Smith, LargeEntriesStayExact) {
  // entries past 64 bits
  Integer big = Integer(1) << 80;
  auto m = SparseIntMatrix::from_triplets(2, 2, {{0, 0, big}, {1, 1, big * 3}});
  auto f = smith_normal_form(m);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], big);
  EXPECT_EQ(f[1], big * 3);
}

}  // namespace
}  // namespace wordhom
