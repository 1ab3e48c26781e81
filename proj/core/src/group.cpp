#include "wordhom/group.hpp"

#include "wordhom/error.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <numeric>
#include <optional>

namespace wordhom {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "group must be nonempty");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw Error(ErrorCode::InvalidInput, "multiplication table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] >= n) throw Error(ErrorCode::InvalidInput, "multiplication table is not closed");
      if (table_[a][b] == 0) inverse_[a] = b;
    }
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table, std::string name) {
  FiniteGroup g(std::move(table), std::move(name));
  if (!g.verify_axioms()) throw Error(ErrorCode::InvalidInput, "table does not define a group with identity 0");
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw Error(ErrorCode::InvalidInput, "symmetric group needs 1 <= n <= 6", "n=" + std::to_string(n));
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  std::vector<int> c(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      table[a][b] = index.at(c);
    }
  }
  return FiniteGroup(std::move(table), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::cyclic(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidInput, "cyclic group needs order >= 1");
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup(std::move(table), "C" + std::to_string(order));
}

bool FiniteGroup::verify_axioms() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) return false;
    if (inverse_[a] >= n || table_[inverse_[a]][a] != 0) return false;
    std::vector<bool> seen(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[table_[a][b]]) return false;  // rows of a group table are permutations
      seen[table_[a][b]] = true;
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::size_t bar_generator_count(const FiniteGroup& group, int k, bool normalized) {
  if (k < 0) return 0;
  const std::size_t base = normalized ? group.order() - 1 : group.order();
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) {
    if (base != 0 && count > std::numeric_limits<std::size_t>::max() / base) return std::numeric_limits<std::size_t>::max();
    count *= base;
  }
  return count;
}

SparseIntMatrix bar_boundary(const FiniteGroup& group, int k, bool normalized, const ResourceLimits& limits) {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "negative bar degree");
  const std::size_t cols = bar_generator_count(group, k, normalized);
  const std::size_t rows = k == 0 ? 0 : bar_generator_count(group, k - 1, normalized);
  if (cols > limits.max_generators || rows > limits.max_generators)
    throw Error(ErrorCode::ResourceLimit, "bar complex degree too large",
                std::to_string(std::max(cols, rows)) + " generators in degree " + std::to_string(k) + " of " +
                    group.name() + " (limit " + std::to_string(limits.max_generators) + ")");
  if (k == 0) return SparseIntMatrix(0, 1);

  const std::size_t base = normalized ? group.order() - 1 : group.order();
  const std::size_t shift = normalized ? 1 : 0;  // element = digit + shift
  const auto ku = static_cast<std::size_t>(k);
  std::vector<MatrixEntry> entries;
  entries.reserve(cols * (ku + 1));
  std::vector<std::size_t> g(ku);
  std::vector<std::size_t> face;
  face.reserve(ku);

  auto encode = [&](const std::vector<std::size_t>& elems) -> std::optional<std::size_t> {
    std::size_t idx = 0;
    for (std::size_t e : elems) {
      if (normalized && e == FiniteGroup::identity()) return std::nullopt;
      idx = idx * base + (e - shift);
    }
    return idx;
  };

  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t rem = col;
    for (std::size_t i = ku; i-- > 0;) {
      g[i] = rem % base + shift;
      rem /= base;
    }
    for (std::size_t i = 0; i <= ku; ++i) {
      face.clear();
      if (i == 0) {
        face.assign(g.begin() + 1, g.end());
      } else if (i == ku) {
        face.assign(g.begin(), g.end() - 1);
      } else {
        for (std::size_t j = 0; j < ku; ++j) {
          if (j == i - 1) {
            face.push_back(group.multiply(g[j], g[j + 1]));
            ++j;
          } else {
            face.push_back(g[j]);
          }
        }
      }
      if (auto row = encode(face)) entries.push_back({*row, col, (i % 2 == 0) ? 1 : -1});
    }
  }
  return SparseIntMatrix::from_triplets(rows, cols, std::move(entries));
}

HomologyGroup group_homology(const FiniteGroup& group, int m, bool normalized, const ResourceLimits& limits) {
  if (m < 0) throw Error(ErrorCode::InvalidInput, "negative homology degree");
  const auto outgoing = bar_boundary(group, m, normalized, limits);
  const auto incoming = bar_boundary(group, m + 1, normalized, limits);
  return homology_from_boundaries(bar_generator_count(group, m, normalized), outgoing, incoming);
}

HomologyGroup sym_homology(int n, int m, const ResourceLimits& limits) {
  return group_homology(FiniteGroup::symmetric(n), m, true, limits);
}

HomologyGroup abelianization(const FiniteGroup& group) {
  const std::size_t n = group.order();
  // commutator subgroup: closure of all commutators under multiplication
  std::vector<bool> in_k(n, false);
  std::vector<std::size_t> k_elems;
  auto insert = [&](std::size_t e) {
    if (!in_k[e]) {
      in_k[e] = true;
      k_elems.push_back(e);
    }
  };
  insert(FiniteGroup::identity());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      insert(group.multiply(group.multiply(a, b), group.multiply(group.inverse(a), group.inverse(b))));
  for (std::size_t i = 0; i < k_elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      insert(group.multiply(k_elems[i], k_elems[j]));
      insert(group.multiply(k_elems[j], k_elems[i]));
    }

  // cosets g[G,G]
  std::vector<std::size_t> coset(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < n; ++g) {
    if (coset[g] != n) continue;
    for (std::size_t h : k_elems) coset[group.multiply(g, h)] = reps.size();
    reps.push_back(g);
  }
  const std::size_t q = reps.size();
  auto mul = [&](std::size_t a, std::size_t b) { return coset[group.multiply(reps[a], reps[b])]; };
  auto power = [&](std::size_t a, std::size_t e) {
    std::size_t r = coset[FiniteGroup::identity()];
    for (std::size_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  };
  const std::size_t unit = coset[FiniteGroup::identity()];

  // p-primary parts from the sizes of the p^k-torsion subgroups
  std::map<std::size_t, std::vector<int>> exponents;  // prime -> e_1 >= e_2 >= ...
  std::size_t rest = q;
  for (std::size_t p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    int full = 0;
    while (rest % p == 0) {
      rest /= p;
      ++full;
    }
    std::vector<int> at_least;  // at_least[k-1] = #{i : e_i >= k}
    int prev = 0;
    std::size_t pk = 1;
    while (prev < full) {
      pk *= p;
      std::size_t count = 0;
      for (std::size_t a = 0; a < q; ++a)
        if (power(a, pk) == unit) ++count;
      int s = 0;
      while (count > 1) {
        count /= p;
        ++s;
      }
      at_least.push_back(s - prev);
      prev = s;
    }
    std::vector<int> e(static_cast<std::size_t>(at_least.front()), 0);
    for (int cnt : at_least)
      for (int i = 0; i < cnt; ++i) ++e[static_cast<std::size_t>(i)];
    exponents[p] = e;
  }
  std::size_t width = 0;
  for (auto& [p, e] : exponents) width = std::max(width, e.size());
  std::vector<Integer> factors(width, 1);  // factors[0] largest
  for (auto& [p, e] : exponents)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) factors[i] *= p;
  std::reverse(factors.begin(), factors.end());
  return HomologyGroup{0, factors};
}

NakaokaReport nakaoka_check(int n, int m, const ResourceLimits& limits) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "nakaoka check needs n >= 2");
  if (m < 0) throw Error(ErrorCode::InvalidInput, "negative homology degree");
  NakaokaReport r;
  r.n = n;
  r.m = m;
  r.lhs = sym_homology(n - 1, m, limits);
  r.rhs = sym_homology(n, m, limits);
  r.in_range = 2 * m < n;
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace wordhom
