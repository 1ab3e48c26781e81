#pragma once

#include "wordhom/alphabet.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace wordhom {

/// A family of predicates G_{l,m}(x; y) on words over an alphabet.
///
/// Implementations are expected to satisfy the symmetry, weakening and
/// composition axioms; check_axioms() tests that on random samples. An empty
/// x is in general position to everything.
class GeneralPositionRelation {
 public:
  virtual ~GeneralPositionRelation() = default;

  const Alphabet& alphabet() const noexcept { return alphabet_; }

  bool operator()(std::span<const Symbol> x, std::span<const Symbol> y) const {
    return x.empty() || test(x, y);
  }

  virtual std::string name() const = 0;

  /// True when blocking depends only on the set of (equivalence classes of)
  /// elements of a sequence, so gp_order may search subsets instead of sequences.
  virtual bool set_sufficient() const { return false; }

  /// Symbols gp_order searches by default.
  virtual std::vector<Symbol> search_universe() const { return alphabet_.symbols(); }

  /// True when words in general position have bounded length, so F_G(X;b)
  /// can be built without a degree cap.
  virtual bool bounded() const { return false; }

 protected:
  explicit GeneralPositionRelation(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  virtual bool test(std::span<const Symbol> x, std::span<const Symbol> y) const = 0;

 private:
  Alphabet alphabet_;
};

/// x has pairwise distinct entries and shares no entry with y.
bool gp_inj(std::span<const Symbol> x, std::span<const Symbol> y);

/// No linear relation over F_p among the entries of x followed by y with at
/// most dim nonzero coefficients has a nonzero coefficient on an x entry.
/// Equivalently: no x entry lies in the span of dim-1 of the other entries.
bool gp_vec(const Alphabet& alphabet, std::span<const Symbol> x, std::span<const Symbol> y);

/// Rank over F_p of a list of vectors.
int rank_mod_p(const Alphabet& alphabet, std::span<const Symbol> vectors);

class InjectiveRelation final : public GeneralPositionRelation {
 public:
  explicit InjectiveRelation(int m);
  explicit InjectiveRelation(const Alphabet& letters);

  std::string name() const override { return "inj(" + std::to_string(alphabet().letter_count()) + ")"; }
  bool set_sufficient() const override { return true; }
  bool bounded() const override { return true; }

 protected:
  bool test(std::span<const Symbol> x, std::span<const Symbol> y) const override { return gp_inj(x, y); }
};

class VectorRelation final : public GeneralPositionRelation {
 public:
  VectorRelation(int p, int dim);
  explicit VectorRelation(const Alphabet& vectors);

  std::string name() const override {
    return "vec(" + std::to_string(alphabet().prime()) + "," + std::to_string(alphabet().dim()) + ")";
  }
  bool set_sufficient() const override { return true; }
  /// Projective points: scaling never changes a gp_vec answer.
  std::vector<Symbol> search_universe() const override { return alphabet().projective_points(); }
  bool bounded() const override { return true; }

 protected:
  bool test(std::span<const Symbol> x, std::span<const Symbol> y) const override {
    return gp_vec(alphabet(), x, y);
  }
};

/// Relation backed by an arbitrary predicate; used for user-supplied and mutated relations.
class PredicateRelation final : public GeneralPositionRelation {
 public:
  using Predicate = std::function<bool(std::span<const Symbol>, std::span<const Symbol>)>;

  PredicateRelation(Alphabet alphabet, Predicate predicate, std::string name, bool set_sufficient = false,
                    bool bounded = false);

  std::string name() const override { return name_; }
  bool set_sufficient() const override { return set_sufficient_; }
  bool bounded() const override { return bounded_; }

 protected:
  bool test(std::span<const Symbol> x, std::span<const Symbol> y) const override { return predicate_(x, y); }

 private:
  Predicate predicate_;
  std::string name_;
  bool set_sufficient_;
  bool bounded_;
};

// ---------------------------------------------------------------------------
// |G| search

struct GpOrderResult {
  /// Exact: value is |G| and witness a shortest blocking sequence.
  /// Otherwise value is a proven lower bound and witness is empty.
  bool exact = false;
  std::size_t value = 0;
  Word witness;
};

struct GpOrderOptions {
  std::size_t max_n = 8;
  /// Search subsets of the universe rather than sequences with repetition.
  std::optional<bool> set_sufficient;
  unsigned jobs = 1;
};

/// No candidate y satisfies G((y); sequence).
bool is_blocking(const GeneralPositionRelation& G, std::span<const Symbol> sequence,
                 std::span<const Symbol> candidates);

GpOrderResult gp_order(const GeneralPositionRelation& G, std::span<const Symbol> universe,
                       const GpOrderOptions& options = {});
GpOrderResult gp_order(const GeneralPositionRelation& G, const GpOrderOptions& options = {});

// ---------------------------------------------------------------------------
// Axiom checking

struct AxiomTriple {
  Word x;
  Word y;
  Word z;
};

using TripleSampler = std::function<AxiomTriple(std::mt19937_64&)>;

/// Word lengths l, m, n uniform in 0..3; every other draw is built greedily
/// so that the concatenation (x, y, z) is itself in general position, which
/// is what exercises the composition axiom's hypothesis.
TripleSampler default_sampler(const GeneralPositionRelation& G);

struct AxiomViolation {
  std::string axiom;
  AxiomTriple triple;
  std::string detail;
};

struct AxiomReport {
  std::string relation;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t violations = 0;
  /// Times each implication's hypothesis held: (ii) first, (ii) second, (iii).
  std::size_t weakening_xy_exercised = 0;
  std::size_t weakening_drop_exercised = 0;
  std::size_t composition_exercised = 0;
  std::optional<AxiomViolation> counterexample;

  bool passed() const noexcept { return violations == 0; }
};

AxiomReport check_axioms(const GeneralPositionRelation& G, const TripleSampler& sampler, std::size_t trials,
                         std::uint64_t seed);

}  // namespace wordhom
