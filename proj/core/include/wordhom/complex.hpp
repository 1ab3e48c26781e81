#pragma once

#include "wordhom/alphabet.hpp"
#include "wordhom/chain.hpp"
#include "wordhom/genpos.hpp"
#include "wordhom/limits.hpp"
#include "wordhom/sparse_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wordhom {

/// A based chain complex of words: per-degree bases in lexicographic order
/// and the boundary matrices d_k : C_k -> C_{k-1} in those bases.
///
/// A complete complex is zero above its top degree. A truncated one says
/// nothing there, and homology is only reliable below the top degree.
class ChainComplexRep {
 public:
  ChainComplexRep(Alphabet alphabet, std::vector<std::vector<Word>> bases, bool complete, std::string label);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& label() const noexcept { return label_; }
  int top_degree() const noexcept { return static_cast<int>(bases_.size()) - 1; }
  bool complete() const noexcept { return complete_; }

  /// Empty above the top degree of a complete complex; TruncationError for a truncated one.
  const std::vector<Word>& basis(int k) const;
  std::vector<std::size_t> basis_sizes() const;
  std::size_t total_size() const;

  /// d_k for 0 <= k <= top (and k = top + 1 when complete, a zero map).
  const SparseIntMatrix& boundary_matrix(int k) const;

  std::optional<std::size_t> index_of(int k, const Word& w) const;

  /// Coordinates of a chain in the degree-k basis; throws InvalidInput if a word is not a basis word.
  std::vector<Integer> coordinates(const Chain& c) const;
  Chain chain_from_coordinates(int k, const std::vector<Integer>& coords) const;

 private:
  void check_degree(int k) const;

  Alphabet alphabet_;
  std::vector<std::vector<Word>> bases_;
  std::vector<SparseIntMatrix> boundaries_;  // index k holds d_k; one extra when complete
  bool complete_;
  std::string label_;
  std::vector<Word> empty_;
};

/// C_*(m): injective words over 1..m, all degrees 0..m. Requires 1 <= m <= 8.
ChainComplexRep build_injective(int m, const ResourceLimits& limits = ResourceLimits::from_environment());

/// F(X) for |X| = m, truncated at max_degree.
ChainComplexRep build_full(int m, int max_degree, const ResourceLimits& limits = ResourceLimits::from_environment());

/// F_G(X; base): words w with G(w; base). Without max_degree the relation must
/// be bounded and degrees are added until one comes out empty.
ChainComplexRep build_gp(const GeneralPositionRelation& G, const Word& base, std::optional<int> max_degree = {},
                         const ResourceLimits& limits = ResourceLimits::from_environment());

}  // namespace wordhom
