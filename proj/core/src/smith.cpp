#include "wordhom/smith.hpp"

#include "wordhom/error.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <utility>

namespace wordhom {

namespace {

using Index = std::uint32_t;

struct Cell {
  Index col;
  Integer value;
};

using Row = std::vector<Cell>;

class Eliminator {
 public:
  explicit Eliminator(const SparseIntMatrix& m)
      : rows_(m.rows()), col_rows_(m.cols()), col_count_(m.cols(), 0), listed_count_(m.cols(), 0),
        dirty_flag_(m.cols(), 0) {
    for (const auto& e : m.entries()) {
      rows_[e.row].push_back({static_cast<Index>(e.col), e.value});
      col_rows_[e.col].push_back(static_cast<Index>(e.row));
      ++col_count_[e.col];
    }
    for (auto& r : rows_)
      std::sort(r.begin(), r.end(), [](const Cell& a, const Cell& b) { return a.col < b.col; });
    for (Index c = 0; c < col_rows_.size(); ++c) mark(c);
    for (Index r = 0; r < rows_.size(); ++r)
      if (!rows_[r].empty()) row_lengths_.insert({rows_[r].size(), r});
  }

  std::vector<Integer> run() {
    std::vector<Integer> diagonal;
    while (true) {
      refresh();
      if (active_.empty()) break;
      const auto [row, col] = choose_pivot();
      diagonal.push_back(isolate(row, col));
    }
    return diagonal;
  }

 private:
  const Integer& value(Index row, Index col) const {
    const Row& r = rows_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const Cell& c, Index k) { return c.col < k; });
    return it->value;
  }

  bool has_entry(Index row, Index col) const {
    const Row& r = rows_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const Cell& c, Index k) { return c.col < k; });
    return it != r.end() && it->col == col;
  }

  // Column row lists are allowed to hold stale and repeated rows; this
  // compacts one to exactly the rows with an entry in the column.
  const std::vector<Index>& live_rows(Index col) {
    auto& v = col_rows_[col];
    v.erase(std::remove_if(v.begin(), v.end(), [&](Index r) { return !has_entry(r, col); }), v.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  void mark(Index col) {
    if (!dirty_flag_[col]) {
      dirty_flag_[col] = 1;
      dirty_.push_back(col);
    }
  }

  void refresh() {
    for (Index c : dirty_) {
      dirty_flag_[c] = 0;
      if (listed_count_[c]) active_.erase({listed_count_[c], c});
      listed_count_[c] = col_count_[c];
      if (col_count_[c]) active_.insert({col_count_[c], c});
    }
    dirty_.clear();
  }

  // Markowitz search over the sparsest few columns and rows: least
  // (col count - 1) * (row length - 1), then least |value|, then (row, col).
  std::pair<Index, Index> choose_pivot() {
    constexpr int kSearch = 4;
    struct Key {
      std::size_t cost;
      Integer magnitude;
      Index row, col;
    };
    std::optional<Key> best;
    auto consider = [&](Index r, Index c, const Integer& v) {
      const std::size_t cost = (col_count_[c] - 1) * (rows_[r].size() - 1);
      if (best && cost > best->cost) return;
      Integer mag = abs_value(v);
      if (best && cost == best->cost && std::tie(mag, r, c) >= std::tie(best->magnitude, best->row, best->col))
        return;
      best = Key{cost, std::move(mag), r, c};
    };
    int n = 0;
    for (auto it = active_.begin(); it != active_.end() && n < kSearch; ++it, ++n) {
      const Index c = it->second;
      for (Index r : live_rows(c)) consider(r, c, value(r, c));
    }
    n = 0;
    for (auto it = row_lengths_.begin(); it != row_lengths_.end() && n < kSearch; ++it, ++n)
      for (const Cell& cell : rows_[it->second]) consider(it->second, cell.col, cell.value);
    return {best->row, best->col};
  }

  Index best_row(Index col) {
    const auto& rows = live_rows(col);
    Index best = rows.front();
    for (Index r : rows) {
      const Integer a = abs_value(value(r, col));
      const Integer b = abs_value(value(best, col));
      if (a < b || (a == b && (rows_[r].size() < rows_[best].size() ||
                               (rows_[r].size() == rows_[best].size() && r < best))))
        best = r;
    }
    return best;
  }

  void entry_removed(Index col) {
    --col_count_[col];
    mark(col);
  }

  void entry_added(Index col, Index row) {
    auto& v = col_rows_[col];
    if (v.size() > 2 * col_count_[col] + 16) live_rows(col);
    v.push_back(row);
    ++col_count_[col];
    mark(col);
  }

  Row take_row(Index row) {
    if (!rows_[row].empty()) row_lengths_.erase({rows_[row].size(), row});
    Row r = std::move(rows_[row]);
    rows_[row] = Row();
    return r;
  }

  void put_row(Index row, Row&& cells) {
    rows_[row] = std::move(cells);
    if (!rows_[row].empty()) row_lengths_.insert({rows_[row].size(), row});
  }

  // target -= q * source
  void row_axpy(Index target, Index source, const Integer& q) {
    Row dst = take_row(target);
    const Row& src = rows_[source];
    Row merged;
    merged.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].col < src[j].col)) {
        merged.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[j].col < dst[i].col) {
        merged.push_back({src[j].col, -q * src[j].value});
        entry_added(src[j].col, target);
        ++j;
      } else {
        Integer v = dst[i].value - q * src[j].value;
        if (v == 0) {
          entry_removed(dst[i].col);
        } else {
          merged.push_back({dst[i].col, std::move(v)});
        }
        ++i;
        ++j;
      }
    }
    put_row(target, std::move(merged));
  }

  // Clears column col with row ops against pivot row; returns the row holding
  // the final pivot (the column's only entry).
  Index clear_column(Index row, Index col) {
    while (true) {
      const Integer p = value(row, col);
      bool remainder = false;
      std::vector<Index> others;
      for (Index r : live_rows(col))
        if (r != row) others.push_back(r);
      for (Index r : others) {
        const Integer q = value(r, col) / p;  // truncates toward zero
        if (q != 0) row_axpy(r, row, q);
        if (has_entry(r, col)) remainder = true;
      }
      if (!remainder) return row;
      row = best_row(col);
    }
  }

  // Eliminates until the pivot at (row, col) is alone in its row and column,
  // removes both, and returns |pivot|.
  Integer isolate(Index row, Index col) {
    while (true) {
      row = clear_column(row, col);
      const Integer p = value(row, col);
      // column ops against column col only touch this row
      Index next_col = col;
      Integer smallest = abs_value(p);
      Row r = take_row(row);
      Row kept;
      kept.reserve(r.size());
      for (auto& cell : r) {
        if (cell.col != col) {
          cell.value %= p;
          if (cell.value == 0) {
            entry_removed(cell.col);
            continue;
          }
          if (abs_value(cell.value) < smallest) {
            smallest = abs_value(cell.value);
            next_col = cell.col;
          }
        }
        kept.push_back(std::move(cell));
      }
      if (next_col == col) {
        entry_removed(col);
        return abs_value(p);
      }
      put_row(row, std::move(kept));
      col = next_col;
    }
  }

  std::vector<Row> rows_;
  std::vector<std::vector<Index>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<std::size_t> listed_count_;  // count under which the column sits in active_
  std::vector<char> dirty_flag_;
  std::vector<Index> dirty_;
  std::set<std::pair<std::size_t, Index>> active_;       // (nonzeros, col), refreshed lazily
  std::set<std::pair<std::size_t, Index>> row_lengths_;  // (nonzeros, row)
};

}  // namespace

std::vector<Integer> diagonal_invariant_factors(std::vector<Integer> diagonal) {
  std::vector<Integer> units, rest;
  for (auto& d : diagonal) {
    Integer a = abs_value(d);
    if (a == 0) continue;
    (a == 1 ? units : rest).push_back(std::move(a));
  }
  std::sort(rest.begin(), rest.end());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      Integer g = boost::multiprecision::gcd(rest[i], rest[j]);
      if (g == rest[i]) continue;
      Integer l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  }
  std::vector<Integer> out;
  out.reserve(units.size() + rest.size());
  for (auto& u : units) out.push_back(std::move(u));
  for (auto& r : rest)
    out.push_back(std::move(r));
  // a gcd pass can produce new units; keep the chain sorted
  std::stable_sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> smith_normal_form(const SparseIntMatrix& m) {
  if (m.is_zero()) return {};
  Eliminator elim(m);
  return diagonal_invariant_factors(elim.run());
}

std::size_t rank_mod(const SparseIntMatrix& m, std::uint32_t p) {
  if (p < 2) throw Error(ErrorCode::InvalidInput, "rank_mod needs p >= 2");
  using Residue = std::uint64_t;
  auto reduce = [p](const Integer& v) {
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<Residue>(r);
  };
  auto inverse = [p](Residue a) {
    // Fermat; p is assumed prime
    Residue result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  // rows as sorted sparse vectors over F_p; incremental echelon basis keyed by pivot column
  std::vector<std::vector<std::pair<std::size_t, Residue>>> rows(m.rows());
  for (const auto& e : m.entries()) {
    Residue v = reduce(e.value);
    if (v) rows[e.row].push_back({e.col, v});
  }
  std::vector<std::vector<std::pair<std::size_t, Residue>>> basis(m.cols());
  std::size_t rank = 0;
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    auto cur = r;
    while (!cur.empty()) {
      const std::size_t lead = cur.front().first;
      auto& b = basis[lead];
      if (b.empty()) {
        Residue inv = inverse(cur.front().second);
        for (auto& [c, v] : cur) v = v * inv % p;
        b = std::move(cur);
        ++rank;
        break;
      }
      const Residue f = cur.front().second;
      std::vector<std::pair<std::size_t, Residue>> next;
      std::size_t i = 0, j = 0;
      while (i < cur.size() || j < b.size()) {
        if (j == b.size() || (i < cur.size() && cur[i].first < b[j].first)) {
          next.push_back(cur[i++]);
        } else if (i == cur.size() || b[j].first < cur[i].first) {
          next.push_back({b[j].first, (p - f * b[j].second % p) % p});
          ++j;
        } else {
          Residue v = (cur[i].second + p - f * b[j].second % p) % p;
          if (v) next.push_back({cur[i].first, v});
          ++i;
          ++j;
        }
      }
      cur = std::move(next);
    }
  }
  return rank;
}

}  // namespace wordhom
