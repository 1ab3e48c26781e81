#pragma once

#include "wordhom/complex.hpp"
#include "wordhom/integer.hpp"
#include "wordhom/sparse_matrix.hpp"

#include <string>
#include <vector>

namespace wordhom {

/// Z^free_rank ⊕ Z/t_1 ⊕ ... with t_1 | t_2 | ... and every t_i >= 2.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  /// Written as `Z^r ⊕ Z/t1 ⊕ …`, or `0` for the trivial group.
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Homology at a chain group of dimension `dim` with outgoing boundary d_k and incoming boundary d_{k+1}.
HomologyGroup homology_from_boundaries(std::size_t dim, const SparseIntMatrix& outgoing,
                                       const SparseIntMatrix& incoming);

/// H_k of a built complex. TruncationError when d_{k+1} was never materialized.
HomologyGroup homology(const ChainComplexRep& complex, int k);

/// H_0 .. H_last where last is the top degree of a complete complex or one
/// below the truncation. Each Smith form is computed once.
std::vector<HomologyGroup> homology_table(const ChainComplexRep& complex);

/// Fixed-point-free permutations of m letters, by inclusion-exclusion.
Integer derangement_count(int m);

/// (-1)^m (1 - sum_{i=0}^{m-1} (-1)^i m(m-1)...(m-i)), evaluated literally.
Integer rank_formula(int m);

}  // namespace wordhom
