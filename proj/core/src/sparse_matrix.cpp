#include "wordhom/sparse_matrix.hpp"

#include "wordhom/error.hpp"

#include <algorithm>
#include <map>

namespace wordhom {

namespace {

bool column_major(const MatrixEntry& a, const MatrixEntry& b) {
  return a.col != b.col ? a.col < b.col : a.row < b.row;
}

}  // namespace

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries) {
  SparseIntMatrix m(rows, cols);
  for (const auto& e : entries)
    if (e.row >= rows || e.col >= cols) throw Error(ErrorCode::InvalidInput, "matrix entry out of bounds");
  std::sort(entries.begin(), entries.end(), column_major);
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
      if (m.entries_.back().value == 0) m.entries_.pop_back();
    } else if (e.value != 0) {
      m.entries_.push_back(std::move(e));
    }
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  std::vector<MatrixEntry> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, i, 1});
  return from_triplets(n, n, std::move(e));
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows ? dense.front().size() : 0;
  std::vector<MatrixEntry> e;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (dense[r][c] != 0) e.push_back({r, c, dense[r][c]});
  return from_triplets(rows, cols, std::move(e));
}

Integer SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  MatrixEntry key{row, col, 0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, column_major);
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
  for (const auto& e : entries_) d[e.row][e.col] = e.value;
  return d;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  std::vector<MatrixEntry> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back({x.col, x.row, x.value});
  return from_triplets(cols_, rows_, std::move(e));
}

SparseIntMatrix SparseIntMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                          const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_)
    throw Error(ErrorCode::InvalidInput, "permutation size does not match matrix");
  std::vector<MatrixEntry> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back({row_perm[x.row], col_perm[x.col], x.value});
  return from_triplets(rows_, cols_, std::move(e));
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidInput, "matrix dimensions do not compose");
  // rows of b indexed by their row
  std::vector<std::vector<const MatrixEntry*>> b_rows(b.rows());
  for (const auto& e : b.entries()) b_rows[e.row].push_back(&e);
  std::map<std::pair<std::size_t, std::size_t>, Integer> acc;
  for (const auto& ea : a.entries())
    for (const MatrixEntry* eb : b_rows[ea.col]) acc[{ea.row, eb->col}] += ea.value * eb->value;
  std::vector<MatrixEntry> e;
  for (auto& [rc, v] : acc)
    if (v != 0) e.push_back({rc.first, rc.second, v});
  return SparseIntMatrix::from_triplets(a.rows(), b.cols(), std::move(e));
}

}  // namespace wordhom
