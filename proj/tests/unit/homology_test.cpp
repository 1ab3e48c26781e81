#include "oracles.hpp"

#include "wordhom/error.hpp"
#include "wordhom/homology.hpp"

#include <gtest/gtest.h>

namespace wordhom {
namespace {

using testing::letters;

TEST(Derangements, SmallValues) {
  EXPECT_EQ(derangement_count(0), 1);
  EXPECT_EQ(derangement_count(1), 0);
  EXPECT_EQ(derangement_count(2), 1);
  EXPECT_EQ(derangement_count(3), 2);
  EXPECT_EQ(derangement_count(4), 9);
}

TEST(Derangements, AgreeWithEnumerationAndClosedForm) {
  for (int m = 0; m <= 10; ++m) {
    EXPECT_EQ(derangement_count(m), Integer(testing::brute_force_derangements(m))) << m;
    EXPECT_EQ(rank_formula(m), derangement_count(m)) << m;
  }
}

TEST(Homology, InjectiveComplexOfThreeLetters) {
  auto c = build_injective(3);
  EXPECT_TRUE(homology(c, 1).is_trivial());
  auto top = homology(c, 3);
  EXPECT_EQ(top.free_rank, 2u);
  EXPECT_TRUE(top.torsion.empty());
}

TEST(Homology, TopCycleOfTwoLetters) {
  auto c = build_injective(2);
  EXPECT_EQ(homology(c, 2).free_rank, 1u);
  Chain z(2);
  z.add(letters({1, 2}), 1);
  z.add(letters({2, 1}), 1);
  EXPECT_TRUE(boundary(z).is_zero());
}

TEST(Homology, InjectiveComplexesVanishBelowTop) {
  for (int m = 1; m <= 6; ++m) {
    auto table = homology_table(build_injective(m));
    ASSERT_EQ(table.size(), static_cast<std::size_t>(m) + 1);
    for (int k = 0; k < m; ++k) ASSERT_TRUE(table[static_cast<std::size_t>(k)].is_trivial()) << m << "," << k;
    ASSERT_EQ(Integer(table.back().free_rank), derangement_count(m));
    ASSERT_TRUE(table.back().torsion.empty());
  }
}

TEST(Homology, FullComplexIsAcyclic) {
  for (int m = 1; m <= 3; ++m) {
    auto c = build_full(m, 5);
    auto table = homology_table(c);
    ASSERT_EQ(table.size(), 5u);
    for (int k = 0; k <= 4; ++k) EXPECT_TRUE(table[static_cast<std::size_t>(k)].is_trivial()) << m << "," << k;
  }
}

TEST(Homology, TruncationIsReported) {
  auto c = build_full(2, 3);
  EXPECT_NO_THROW(homology(c, 2));
  try {
    homology(c, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationError);
  }
}

TEST(Homology, AboveTopOfCompleteComplexIsZero) {
  EXPECT_TRUE(homology(build_injective(3), 7).is_trivial());
}

TEST(Homology, TorsionFromBoundaries) {
  // C_1 = Z with d_2 = multiplication by 2 from C_2 = Z and d_1 = 0: H_1 = Z/2
  auto h = homology_from_boundaries(1, SparseIntMatrix(0, 1), SparseIntMatrix::from_dense({{2}}));
  EXPECT_EQ(h.free_rank, 0u);
  EXPECT_EQ(h.torsion, (std::vector<Integer>{2}));
  EXPECT_EQ(h.to_string(), "Z/2");
}

TEST(HomologyGroup, Formatting) {
  EXPECT_EQ(HomologyGroup{}.to_string(), "0");
  EXPECT_EQ((HomologyGroup{1, {}}).to_string(), "Z");
  EXPECT_EQ((HomologyGroup{9, {}}).to_string(), "Z^9");
  EXPECT_EQ((HomologyGroup{2, {2, 4}}).to_string(), "Z^2 ⊕ Z/2 ⊕ Z/4");
}

TEST(Homology, GeneralPositionComplexesVanishInRange) {
  // |G| = q + 1 for d = 2; vanishing for m <= (|G| - l - 1)/2
  VectorRelation G(3, 2);
  auto c = build_gp(G, Word{});
  auto table = homology_table(c);
  EXPECT_TRUE(table[0].is_trivial());
  EXPECT_TRUE(table[1].is_trivial());
}

}  // namespace
}  // namespace wordhom
