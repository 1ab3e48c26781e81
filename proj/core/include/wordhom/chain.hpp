#pragma once

#include "wordhom/alphabet.hpp"
#include "wordhom/integer.hpp"

#include <map>
#include <set>

namespace wordhom {

/// A homogeneous integer linear combination of words of one length.
///
/// Terms are kept in lexicographic word order with no zero coefficients, so
/// two equal chains iterate (and serialize) identically. The zero chain of
/// degree -1 is what the boundary of a degree-0 chain lands in.
class Chain {
 public:
  using Terms = std::map<Word, Integer>;

  explicit Chain(int degree = 0);

  static Chain term(Word word, Integer coeff = 1);

  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  Terms::const_iterator begin() const noexcept { return terms_.begin(); }
  Terms::const_iterator end() const noexcept { return terms_.end(); }

  Integer coefficient(const Word& word) const;

  /// Adds coeff * word; the word length must equal the degree.
  void add(const Word& word, const Integer& coeff);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Integer& scalar);

  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Integer& s, Chain c) { return c *= s; }
  friend Chain operator-(Chain c) { return c *= Integer(-1); }

  /// Zero chains compare equal regardless of degree.
  friend bool operator==(const Chain& a, const Chain& b);

 private:
  void require_degree(int other, const char* op) const;

  int degree_;
  Terms terms_;
};

/// Alternating sum of single-entry deletions. Degree-1 words map to the empty
/// word (augmentation); degree-0 chains map to zero.
Chain boundary(const Chain& c);

Word delete_entry(const Word& w, std::size_t index);

enum class ProductMode { Concat, Disjoint };

/// Bilinear juxtaposition of words. In Disjoint mode a symbol appearing in
/// both factors raises DisjointnessViolation.
Chain product(const Chain& left, const Chain& right, ProductMode mode = ProductMode::Concat);

/// Product with a single word on the left (coefficient 1), the (x)·c of the cone constructions.
Chain prepend(const Word& prefix, const Chain& c);

std::set<Symbol> appearing_symbols(const Chain& c);

bool appears_in(Symbol s, const Chain& c);

}  // namespace wordhom
