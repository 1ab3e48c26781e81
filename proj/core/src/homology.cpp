#include "wordhom/homology.hpp"

#include "wordhom/error.hpp"
#include "wordhom/smith.hpp"

#include <algorithm>

namespace wordhom {

std::string HomologyGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z/" + t.str();
  }
  return out;
}

namespace {

HomologyGroup assemble(std::size_t dim, std::size_t rank_out, const std::vector<Integer>& incoming_factors) {
  const std::size_t rank_in = incoming_factors.size();
  if (rank_out + rank_in > dim)
    throw Error(ErrorCode::InternalInvariantBroken, "boundary ranks exceed the chain group dimension");
  HomologyGroup h;
  h.free_rank = dim - rank_out - rank_in;
  for (const auto& f : incoming_factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

}  // namespace

HomologyGroup homology_from_boundaries(std::size_t dim, const SparseIntMatrix& outgoing,
                                       const SparseIntMatrix& incoming) {
  if (outgoing.cols() != dim || incoming.rows() != dim)
    throw Error(ErrorCode::InvalidInput, "boundary matrices do not match the chain group dimension");
  return assemble(dim, smith_normal_form(outgoing).size(), smith_normal_form(incoming));
}

HomologyGroup homology(const ChainComplexRep& complex, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  if (complex.complete() && k > complex.top_degree()) return {};
  if (!complex.complete() && k >= complex.top_degree())
    throw Error(ErrorCode::TruncationError, "homology needs d_{k+1}, which lies beyond the truncation",
                "H_" + std::to_string(k) + " of a complex truncated at degree " + std::to_string(complex.top_degree()));
  return homology_from_boundaries(complex.basis(k).size(), complex.boundary_matrix(k),
                                  complex.boundary_matrix(k + 1));
}

std::vector<HomologyGroup> homology_table(const ChainComplexRep& complex) {
  const int last = complex.complete() ? complex.top_degree() : complex.top_degree() - 1;
  std::vector<std::vector<Integer>> factors;
  for (int k = 0; k <= last + 1; ++k) factors.push_back(smith_normal_form(complex.boundary_matrix(k)));
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= last; ++k)
    out.push_back(assemble(complex.basis(k).size(), factors[static_cast<std::size_t>(k)].size(),
                           factors[static_cast<std::size_t>(k + 1)]));
  return out;
}

Integer derangement_count(int m) {
  if (m < 0) throw Error(ErrorCode::InvalidInput, "m must be >= 0");
  // sum_{i=0}^{m} (-1)^i m!/i!
  Integer total = 0;
  Integer falling = 1;  // m!/i! built from i = m downwards
  for (int i = m; i >= 0; --i) {
    total += (i % 2 == 0) ? falling : Integer(-falling);
    falling *= i;
  }
  return total;
}

Integer rank_formula(int m) {
  if (m < 0) throw Error(ErrorCode::InvalidInput, "m must be >= 0");
  Integer sum = 0;
  Integer prod = 1;
  for (int i = 0; i <= m - 1; ++i) {
    prod *= (m - i);  // m(m-1)...(m-i)
    sum += (i % 2 == 0) ? prod : Integer(-prod);
  }
  Integer value = 1 - sum;
  return (m % 2 == 0) ? value : Integer(-value);
}

}  // namespace wordhom
