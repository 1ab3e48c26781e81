#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wordhom {

/// One letter of a word. Letters are stored by value (1..m); vectors over F_p
/// are stored as their coordinate tuple read as a base-p number with the first
/// coordinate most significant, so numeric order is tuple order.
struct Symbol {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

using Word = std::vector<Symbol>;

enum class AlphabetKind { Letters, Vectors };

class Alphabet {
 public:
  static Alphabet letters(int m);
  static Alphabet vectors(int p, int dim);

  AlphabetKind kind() const noexcept { return kind_; }
  bool is_letters() const noexcept { return kind_ == AlphabetKind::Letters; }
  bool is_vectors() const noexcept { return kind_ == AlphabetKind::Vectors; }

  int letter_count() const noexcept { return m_; }
  int prime() const noexcept { return p_; }
  int dim() const noexcept { return dim_; }

  /// Number of symbols: m for letters, p^dim for vectors (zero vector included).
  std::size_t size() const noexcept;
  bool contains(Symbol s) const noexcept;

  /// Every symbol in canonical order.
  std::vector<Symbol> symbols() const;

  /// Nonzero vectors whose first nonzero coordinate is 1, in canonical order.
  /// Throws for a letters alphabet.
  std::vector<Symbol> projective_points() const;

  std::vector<int> coordinates(Symbol s) const;
  Symbol from_coordinates(std::span<const int> coords) const;
  Symbol letter(int value) const;

  /// Canonical representative of the projective point of a nonzero vector.
  Symbol projective_representative(Symbol s) const;
  Symbol scaled(Symbol s, int factor) const;
  bool is_zero_vector(Symbol s) const;

  std::string describe(Symbol s) const;
  std::string describe(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet(AlphabetKind kind, int m, int p, int dim) : kind_(kind), m_(m), p_(p), dim_(dim) {}

  AlphabetKind kind_;
  int m_ = 0;
  int p_ = 0;
  int dim_ = 0;
};

bool is_prime(int n) noexcept;

}  // namespace wordhom
