#pragma once
// Test-only reference implementations. None of these share code paths with
// the library routines they are used to check.

#include "wordhom/alphabet.hpp"
#include "wordhom/chain.hpp"
#include "wordhom/complex.hpp"
#include "wordhom/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace wordhom::testing {

using Dense = std::vector<std::vector<Integer>>;

/// Textbook dense Smith normal form: bring the smallest entry to the corner,
/// clear its row and column by Euclid, and fold any non-divisible entry back
/// into the pivot row.
inline std::vector<Integer> dense_smith_oracle(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  auto mag = [](const Integer& v) { return v < 0 ? Integer(-v) : v; };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || mag(a[r][c]) < mag(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        Integer q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        Integer q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) dirty = true;
      }
      if (dirty) continue;
      // pivot must divide the rest of the submatrix
      bool folded = false;
      for (std::size_t r = t + 1; r < rows && !folded; ++r)
        for (std::size_t c = t + 1; c < cols && !folded; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
            folded = true;
          }
      if (folded) continue;
      diag.push_back(mag(a[t][t]));
      break;
    }
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

/// Fixed-point-free permutations by enumerating all m! permutations.
inline std::uint64_t brute_force_derangements(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool fixed = false;
    for (std::size_t i = 0; i < p.size(); ++i) fixed = fixed || p[i] == static_cast<int>(i);
    if (!fixed) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Random chain of the given degree with words drawn from `symbols`.
inline Chain random_chain(std::mt19937_64& rng, const std::vector<Symbol>& symbols, int degree, int max_terms,
                          bool injective = false, int coeff_range = 5) {
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> count(0, max_terms);
  Chain c(degree);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Word w;
    if (injective) {
      auto pool = symbols;
      std::shuffle(pool.begin(), pool.end(), rng);
      w.assign(pool.begin(), pool.begin() + degree);
    } else {
      for (int i = 0; i < degree; ++i) w.push_back(symbols[pick(rng)]);
    }
    c.add(w, coeff(rng));
  }
  return c;
}

/// Random chain supported on basis words of a built complex.
inline Chain random_basis_chain(std::mt19937_64& rng, const ChainComplexRep& complex, int degree, int max_terms,
                                int coeff_range = 3) {
  const auto& basis = complex.basis(degree);
  Chain c(degree);
  if (basis.empty()) return c;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> count(1, max_terms);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) c.add(basis[pick(rng)], coeff(rng));
  return c;
}

inline Word letters(std::initializer_list<int> values) {
  Word w;
  for (int v : values) w.push_back(Symbol{static_cast<std::uint32_t>(v)});
  return w;
}

}  // namespace wordhom::testing
