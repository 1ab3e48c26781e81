#pragma once

#include "wordhom/homology.hpp"
#include "wordhom/limits.hpp"
#include "wordhom/sparse_matrix.hpp"

#include <string>
#include <vector>

namespace wordhom {

/// A finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  /// Σ_n as permutations of 1..n in lexicographic order (identity first),
  /// composed as (a·b)(i) = a(b(i)). Requires 1 <= n <= 6.
  static FiniteGroup symmetric(int n);
  static FiniteGroup cyclic(int order);
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table, std::string name);

  std::size_t order() const noexcept { return table_.size(); }
  static constexpr std::size_t identity() noexcept { return 0; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& name() const noexcept { return name_; }

  /// Closure, identity, inverses and associativity, by enumeration.
  bool verify_axioms() const;

 private:
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::string name);

  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::string name_;
};

/// Number of bar generators [g_1|...|g_k]; identities excluded when normalized.
std::size_t bar_generator_count(const FiniteGroup& group, int k, bool normalized);

/// Bar differential C_k -> C_{k-1} with trivial Z coefficients:
/// [g_1|...|g_k] -> [g_2|...|g_k] + sum_i (-1)^i [...|g_i g_{i+1}|...] + (-1)^k [g_1|...|g_{k-1}].
/// Generator index is the mixed-radix number with g_1 most significant.
SparseIntMatrix bar_boundary(const FiniteGroup& group, int k, bool normalized = true,
                             const ResourceLimits& limits = ResourceLimits::from_environment());

/// H_m(G; Z) from the bar complex.
HomologyGroup group_homology(const FiniteGroup& group, int m, bool normalized = true,
                             const ResourceLimits& limits = ResourceLimits::from_environment());

HomologyGroup sym_homology(int n, int m, const ResourceLimits& limits = ResourceLimits::from_environment());

/// G/[G,G] as invariant factors, by enumerating the commutator subgroup.
HomologyGroup abelianization(const FiniteGroup& group);

struct NakaokaReport {
  int n = 0;
  int m = 0;
  HomologyGroup lhs;  ///< H_m(Σ_{n-1})
  HomologyGroup rhs;  ///< H_m(Σ_n)
  bool in_range = false;  ///< m < n/2, where equality is claimed
  bool equal = false;
};

NakaokaReport nakaoka_check(int n, int m, const ResourceLimits& limits = ResourceLimits::from_environment());

}  // namespace wordhom
