#pragma once

#include "wordhom/integer.hpp"

#include <cstddef>
#include <vector>

namespace wordhom {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Integer matrix in coordinate form. Entries are sorted column-major, with no
/// duplicate coordinates and no stored zeros.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Sums duplicate coordinates and drops zeros.
  static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);
  static SparseIntMatrix identity(std::size_t n);
  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& dense);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  const std::vector<MatrixEntry>& entries() const noexcept { return entries_; }

  Integer at(std::size_t row, std::size_t col) const;
  std::vector<std::vector<Integer>> to_dense() const;
  SparseIntMatrix transposed() const;

  /// Rows and columns relabelled: entry (r, c) moves to (row_perm[r], col_perm[c]).
  SparseIntMatrix permuted(const std::vector<std::size_t>& row_perm, const std::vector<std::size_t>& col_perm) const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

}  // namespace wordhom
