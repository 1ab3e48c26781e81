#pragma once

#include "wordhom/integer.hpp"
#include "wordhom/sparse_matrix.hpp"

#include <cstdint>
#include <vector>

namespace wordhom {

/// Invariant factors d_1 | d_2 | ... | d_r (all positive, r = rank) of an
/// integer matrix.
///
/// Sparse elimination by unimodular row and column operations. The pivot
/// column is the active column with the fewest nonzeros (lowest index on
/// ties); within it the pivot row has the smallest |entry|, then the fewest
/// nonzeros, then the lowest index. A pivot that does not divide its column
/// or row is replaced by the Euclidean remainder until it does, at which
/// point it is isolated and recorded. The isolated diagonal is finally
/// brought into divisibility order by gcd/lcm exchanges.
std::vector<Integer> smith_normal_form(const SparseIntMatrix& m);

/// Smith form of a diagonal matrix with the given nonzero entries.
std::vector<Integer> diagonal_invariant_factors(std::vector<Integer> diagonal);

/// Rank over F_p (used only as a cross-check of the integer computation).
std::size_t rank_mod(const SparseIntMatrix& m, std::uint32_t p);

}  // namespace wordhom
