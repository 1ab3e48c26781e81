#include "oracles.hpp"

#include "wordhom/error.hpp"
#include "wordhom/genpos.hpp"

#include <gtest/gtest.h>

namespace wordhom {
namespace {

using testing::letters;

Word vecs(const Alphabet& a, std::initializer_list<std::vector<int>> vs) {
  Word w;
  for (const auto& v : vs) w.push_back(a.from_coordinates(v));
  return w;
}

TEST(GpInj, Examples) {
  EXPECT_TRUE(gp_inj(letters({1, 2}), letters({3, 4})));
  EXPECT_FALSE(gp_inj(letters({1, 1}), Word{}));
  EXPECT_FALSE(gp_inj(letters({2}), letters({5, 2})));
  // repeats inside y are allowed
  EXPECT_TRUE(gp_inj(letters({1}), letters({2, 2})));
}

TEST(GpVec, Examples) {
  const auto a2 = Alphabet::vectors(2, 2);
  EXPECT_TRUE(gp_vec(a2, vecs(a2, {{1, 0}}), vecs(a2, {{0, 1}})));
  EXPECT_FALSE(gp_vec(a2, vecs(a2, {{0, 0}}), Word{}));
  const auto a3 = Alphabet::vectors(3, 2);
  EXPECT_FALSE(gp_vec(a3, vecs(a3, {{1, 0}}), vecs(a3, {{2, 0}})));
}

TEST(GpVec, DimensionTwoIsDistinctProjectivePoints) {
  const auto a = Alphabet::vectors(5, 2);
  for (Symbol u : a.symbols())
    for (Symbol v : a.symbols()) {
      // a zero entry of y takes part in no relation with a nonzero x-coefficient
      const bool expected =
          u.code != 0 && (v.code == 0 || a.projective_representative(u) != a.projective_representative(v));
      ASSERT_EQ(gp_vec(a, Word{u}, Word{v}), expected);
    }
}

TEST(GpVec, OnlyShortRelationsCount) {
  // e1, e2, e3, e1+e2+e3 in F_2^3: the only relation has four terms, more than dim
  const auto a = Alphabet::vectors(2, 3);
  Word w = vecs(a, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  EXPECT_TRUE(gp_vec(a, w, Word{}));
  // e1+e2 is a three-term relation with e1, e2
  EXPECT_FALSE(gp_vec(a, vecs(a, {{1, 1, 0}}), vecs(a, {{1, 0, 0}, {0, 1, 0}})));
  // but only the x-side is constrained: relation among y alone is fine
  EXPECT_TRUE(gp_vec(a, vecs(a, {{0, 0, 1}}), vecs(a, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})));
}

TEST(GpVec, RejectsForeignSymbols) {
  const auto a = Alphabet::vectors(2, 2);
  EXPECT_THROW(gp_vec(a, Word{Symbol{99}}, Word{}), Error);
  EXPECT_THROW(Alphabet::vectors(3, 2).from_coordinates(std::vector<int>{1, 0, 0}), Error);
}

TEST(GpVec, ProjectivelyInvariant) {
  const auto a = Alphabet::vectors(5, 3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  std::uniform_int_distribution<int> scale(1, 4);
  std::uniform_int_distribution<int> len(1, 4);
  const auto syms = a.symbols();
  for (int trial = 0; trial < 500; ++trial) {
    Word x, y;
    for (int i = len(rng); i > 0; --i) x.push_back(syms[pick(rng)]);
    for (int i = len(rng) - 1; i > 0; --i) y.push_back(syms[pick(rng)]);
    Word xs = x, ys = y;
    for (auto& s : xs) s = a.scaled(s, scale(rng));
    for (auto& s : ys) s = a.scaled(s, scale(rng));
    ASSERT_EQ(gp_vec(a, x, y), gp_vec(a, xs, ys));
  }
}

TEST(GpVec, DroppingTrailingArgumentsPreservesGp) {
  VectorRelation G(3, 2);
  auto sampler = default_sampler(G);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    auto t = sampler(rng);
    Word yz = t.y;
    yz.insert(yz.end(), t.z.begin(), t.z.end());
    if (G(t.x, yz)) ASSERT_TRUE(G(t.x, t.z));
  }
}

TEST(Axioms, InjectiveRelationPasses) {
  InjectiveRelation G(6);
  auto report = check_axioms(G, default_sampler(G), 1000, 42);
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.composition_exercised, 100u);
}

TEST(Axioms, VectorRelationPasses) {
  for (auto [p, d] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 2}}) {
    VectorRelation G(p, d);
    auto report = check_axioms(G, default_sampler(G), 1000, 42);
    EXPECT_TRUE(report.passed()) << "p=" << p << " d=" << d;
    EXPECT_GT(report.composition_exercised, 100u);
  }
}

TEST(Axioms, MutatedRelationFailsWithCounterexample) {
  // G^inj without the pairwise-distinct clause
  PredicateRelation broken(Alphabet::letters(6), [](std::span<const Symbol> x, std::span<const Symbol> y) {
    for (Symbol s : x)
      if (std::find(y.begin(), y.end(), s) != y.end()) return false;
    return true;
  }, "inj-without-distinct");
  auto report = check_axioms(broken, default_sampler(broken), 1000, 42);
  EXPECT_FALSE(report.passed());
  ASSERT_TRUE(report.counterexample.has_value());
  const auto& t = report.counterexample->triple;
  EXPECT_FALSE(t.x.empty());
}

TEST(Axioms, SeedReproducible) {
  VectorRelation G(3, 2);
  auto a = check_axioms(G, default_sampler(G), 300, 5);
  auto b = check_axioms(G, default_sampler(G), 300, 5);
  EXPECT_EQ(a.composition_exercised, b.composition_exercised);
  EXPECT_EQ(a.weakening_drop_exercised, b.weakening_drop_exercised);
}

TEST(GpOrder, InjectiveEqualsAlphabetSize) {
  for (int m = 1; m <= 7; ++m) {
    InjectiveRelation G(m);
    auto r = gp_order(G);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value, static_cast<std::size_t>(m));
    EXPECT_EQ(r.witness.size(), static_cast<std::size_t>(m));
  }
}

TEST(GpOrder, VectorTable) {
  struct Row { int p, d; std::size_t order; };
  for (auto row : {Row{2, 2, 3}, Row{3, 2, 4}, Row{5, 2, 6}, Row{2, 3, 4}, Row{3, 3, 4}, Row{2, 4, 5}}) {
    VectorRelation G(row.p, row.d);
    auto r = gp_order(G);
    ASSERT_TRUE(r.exact) << row.p << "," << row.d;
    EXPECT_EQ(r.value, row.order) << row.p << "," << row.d;
    EXPECT_TRUE(is_blocking(G, r.witness, G.alphabet().symbols()));
  }
}

TEST(GpOrder, CountingBasisPlusSumBlocks) {
  // e_1..e_d and their sum admit no further vector when p <= d
  for (auto [p, d] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
    VectorRelation G(p, d);
    const auto& a = G.alphabet();
    Word w;
    std::vector<int> sum(static_cast<std::size_t>(d), 1);
    for (int i = 0; i < d; ++i) {
      std::vector<int> e(static_cast<std::size_t>(d), 0);
      e[static_cast<std::size_t>(i)] = 1;
      w.push_back(a.from_coordinates(e));
    }
    w.push_back(a.from_coordinates(sum));
    EXPECT_TRUE(is_blocking(G, w, a.symbols())) << p << "," << d;
    // and the basis alone does not block
    Word basis(w.begin(), w.end() - 1);
    EXPECT_FALSE(is_blocking(G, basis, a.symbols()));
  }
}

TEST(GpOrder, IndependentOfUniverseOrder) {
  VectorRelation G(3, 2);
  auto universe = G.search_universe();
  auto forward = gp_order(G, universe);
  std::reverse(universe.begin(), universe.end());
  auto backward = gp_order(G, universe);
  EXPECT_EQ(forward.value, backward.value);
  EXPECT_EQ(forward.witness, backward.witness);
}

TEST(GpOrder, ParallelSearchMatchesSerial) {
  VectorRelation G(2, 4);
  GpOrderOptions serial, parallel;
  parallel.jobs = 4;
  auto a = gp_order(G, serial);
  auto b = gp_order(G, parallel);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(GpOrder, SequenceSearchAgreesWithSubsetSearch) {
  InjectiveRelation G(4);
  GpOrderOptions seq;
  seq.set_sufficient = false;
  auto r = gp_order(G, seq);
  ASSERT_TRUE(r.exact);
  EXPECT_EQ(r.value, 4u);
}

TEST(GpOrder, LowerBoundWhenNothingBlocks) {
  VectorRelation G(5, 2);
  GpOrderOptions opts;
  opts.max_n = 3;
  auto r = gp_order(G, opts);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.value, 4u);
  EXPECT_TRUE(r.witness.empty());
}

TEST(GpOrder, EmptyUniverseIsInvalid) {
  InjectiveRelation G(3);
  std::vector<Symbol> none;
  try {
    gp_order(G, none);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

}  // namespace
}  // namespace wordhom
