#pragma once

#include "wordhom/chain.hpp"
#include "wordhom/genpos.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wordhom {

/// One entry of a certificate's audit log.
struct FillStep {
  int depth = 0;        ///< recursion depth of the fill that recorded it
  std::string action;   ///< "cone", "shift", "stage", "lift"
  int degree = 0;       ///< degree of the cycle being filled
  int stage = 0;        ///< stage index (position of the pushed symbol, or I(c))
  Symbol symbol;        ///< pushed / coned symbol
  std::size_t terms = 0;
};

/// A chain `filling` with boundary(filling) == input. The constructor checks
/// the equation and throws VerificationFailed when it does not hold.
class FillCertificate {
 public:
  FillCertificate(Chain input, Chain filling, std::vector<FillStep> steps);

  const Chain& input() const noexcept { return input_; }
  const Chain& filling() const noexcept { return filling_; }
  const std::vector<FillStep>& steps() const noexcept { return steps_; }

  /// Recomputes boundary(filling) == input.
  bool verify() const;

 private:
  Chain input_;
  Chain filling_;
  std::vector<FillStep> steps_;
};

/// Cone on a symbol absent from the cycle: filling = (x)·c.
FillCertificate fill_absent(const Chain& c, Symbol x);

/// Fills a cycle of injective words over 1..m of degree n < m by pushing the
/// smallest appearing letter to the right until it disappears, then coning.
FillCertificate fill_injective(const Chain& c, int m);

/// Largest i such that the first i entries of v are in general position to
/// (x, remaining entries of v, a).
std::size_t i_invariant(const Word& v, Symbol x, const Word& a, const GeneralPositionRelation& G);

/// Minimum of i_invariant over the terms of c (the degree for the zero chain).
std::size_t i_invariant(const Chain& c, Symbol x, const Word& a, const GeneralPositionRelation& G);

struct FillGpOptions {
  /// |G| or a certified lower bound; computed with gp_order when absent.
  std::optional<std::size_t> order;
  /// Reject cycles with 2n + l + 1 > |G| up front (OutOfRange).
  bool enforce_range = true;
};

/// Fills a cycle of F_G(X; a) by raising I(c) to the degree and coning with a
/// symbol x in general position to a. Every filling term lies in F_G(X; a).
FillCertificate fill_gp(const Chain& c, const GeneralPositionRelation& G, const Word& a,
                        const FillGpOptions& options = {});

}  // namespace wordhom
