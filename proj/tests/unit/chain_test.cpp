#include "oracles.hpp"

#include "wordhom/chain.hpp"
#include "wordhom/error.hpp"

#include <gtest/gtest.h>

namespace wordhom {
namespace {

using testing::letters;

Chain ch(std::initializer_list<std::pair<Integer, Word>> terms) {
  Chain c(static_cast<int>(terms.begin()->second.size()));
  for (const auto& [k, w] : terms) c.add(w, k);
  return c;
}

TEST(Boundary, TwoLetterWord) {
  EXPECT_EQ(boundary(Chain::term(letters({1, 2}))), ch({{1, letters({2})}, {-1, letters({1})}}));
}

TEST(Boundary, SquaresToZero) {
  EXPECT_TRUE(boundary(boundary(Chain::term(letters({1, 2, 3})))).is_zero());
}

TEST(Boundary, Linear) {
  Chain c = ch({{4, letters({5, 1})}, {1, letters({2, 3})}});
  Chain expected = ch({{4, letters({1})}, {-4, letters({5})}, {1, letters({3})}, {-1, letters({2})}});
  EXPECT_EQ(boundary(c), expected);
}

TEST(Boundary, DegreeOneAugmentsAndDegreeZeroVanishes) {
  Chain d = boundary(Chain::term(letters({7}), 3));
  EXPECT_EQ(d.degree(), 0);
  EXPECT_EQ(d.coefficient(Word{}), 3);
  EXPECT_TRUE(boundary(Chain::term(Word{}, 5)).is_zero());
}

TEST(Product, Concatenates) {
  EXPECT_EQ(product(Chain::term(letters({1})), Chain::term(letters({2, 3}))), Chain::term(letters({1, 2, 3})));
  EXPECT_EQ(product(Chain::term(letters({1}), 2), Chain::term(letters({2}), 3)), Chain::term(letters({1, 2}), 6));
}

TEST(Product, DisjointModeRejectsSharedSymbol) {
  try {
    product(Chain::term(letters({1})), Chain::term(letters({1, 2})), ProductMode::Disjoint);
    FAIL() << "expected DisjointnessViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DisjointnessViolation);
    EXPECT_NE(e.context().find("1"), std::string::npos);
  }
  EXPECT_NO_THROW(product(Chain::term(letters({3})), Chain::term(letters({1, 2})), ProductMode::Disjoint));
}

TEST(AppearingSymbols, Examples) {
  Chain c = ch({{1, letters({2, 3})}, {4, letters({5, 1})}});
  EXPECT_EQ(appearing_symbols(c), (std::set<Symbol>{Symbol{1}, Symbol{2}, Symbol{3}, Symbol{5}}));
  EXPECT_FALSE(appears_in(Symbol{4}, c));
  EXPECT_TRUE(appearing_symbols(Chain(2)).empty());
  EXPECT_TRUE(appearing_symbols(Chain::term(Word{}, 7)).empty());
}

TEST(Chain, CancellingTermsAreDropped) {
  Chain c = Chain::term(letters({1, 2}), 3);
  c.add(letters({1, 2}), -3);
  EXPECT_TRUE(c.is_zero());
  EXPECT_EQ(c.size(), 0u);
}

TEST(Chain, RejectsWrongLength) {
  Chain c(2);
  EXPECT_THROW(c.add(letters({1}), 1), Error);
  EXPECT_THROW(Chain::term(letters({1})) + Chain::term(letters({1, 2})), Error);
}

TEST(Chain, TermOrderIsLexicographic) {
  Chain c(2);
  c.add(letters({3, 1}), 1);
  c.add(letters({1, 3}), 1);
  c.add(letters({2, 9}), 1);
  std::vector<Word> order;
  for (const auto& [w, k] : c) order.push_back(w);
  EXPECT_EQ(order, (std::vector<Word>{letters({1, 3}), letters({2, 9}), letters({3, 1})}));
}

// Properties on random chains over a six-letter alphabet.

class ChainProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20241015};
  std::vector<Symbol> symbols = Alphabet::letters(6).symbols();
  std::uniform_int_distribution<int> degree{0, 5};
};

TEST_F(ChainProperties, BoundarySquaredVanishes) {
  for (int trial = 0; trial < 10000; ++trial) {
    Chain c = testing::random_chain(rng, symbols, degree(rng), 4);
    ASSERT_TRUE(boundary(boundary(c)).is_zero());
  }
}

TEST_F(ChainProperties, LeibnizRule) {
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = degree(rng), l = degree(rng);
    Chain c = testing::random_chain(rng, symbols, n, 3);
    Chain c2 = testing::random_chain(rng, symbols, l, 3);
    Chain lhs = boundary(product(c, c2));
    Chain rhs = product(boundary(c), c2);
    Chain second = product(c, boundary(c2));
    if (n % 2) second *= Integer(-1);
    rhs += second;
    ASSERT_EQ(lhs, rhs) << "n=" << n << " l=" << l;
  }
}

TEST_F(ChainProperties, BoundaryIsLinear) {
  std::uniform_int_distribution<int> scalar(-4, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = degree(rng);
    Chain c = testing::random_chain(rng, symbols, n, 4);
    Chain c2 = testing::random_chain(rng, symbols, n, 4);
    const Integer a = scalar(rng), b = scalar(rng);
    ASSERT_EQ(boundary(a * c + b * c2), a * boundary(c) + b * boundary(c2));
  }
}

}  // namespace
}  // namespace wordhom
