#include "wordhom/complex.hpp"

#include "wordhom/error.hpp"

#include <algorithm>

namespace wordhom {

namespace {

SparseIntMatrix assemble_boundary(const std::vector<Word>& source, const std::vector<Word>& target,
                                  const Alphabet& alphabet) {
  std::vector<MatrixEntry> entries;
  for (std::size_t col = 0; col < source.size(); ++col) {
    const Word& w = source[col];
    for (std::size_t j = 0; j < w.size(); ++j) {
      Word face = delete_entry(w, j);
      auto it = std::lower_bound(target.begin(), target.end(), face);
      if (it == target.end() || *it != face)
        throw Error(ErrorCode::InternalInvariantBroken, "face of a basis word is not a basis word",
                    alphabet.describe(w) + " -> " + alphabet.describe(face));
      entries.push_back({static_cast<std::size_t>(it - target.begin()), col, (j % 2 == 0) ? 1 : -1});
    }
  }
  return SparseIntMatrix::from_triplets(target.size(), source.size(), std::move(entries));
}

void check_budget(std::size_t total, const ResourceLimits& limits) {
  if (total > limits.max_basis)
    throw Error(ErrorCode::ResourceLimit, "complex basis exceeds the configured limit",
                "basis words > " + std::to_string(limits.max_basis) + " (WORDHOM_MAX_BASIS)");
}

}  // namespace

ChainComplexRep::ChainComplexRep(Alphabet alphabet, std::vector<std::vector<Word>> bases, bool complete,
                                 std::string label)
    : alphabet_(std::move(alphabet)), bases_(std::move(bases)), complete_(complete), label_(std::move(label)) {
  if (bases_.empty() || bases_[0] != std::vector<Word>{Word{}})
    throw Error(ErrorCode::InvalidInput, "degree-0 basis must be the empty word");
  for (std::size_t k = 0; k < bases_.size(); ++k) {
    if (!std::is_sorted(bases_[k].begin(), bases_[k].end()) ||
        std::adjacent_find(bases_[k].begin(), bases_[k].end()) != bases_[k].end())
      throw Error(ErrorCode::InvalidInput, "basis must be strictly increasing", "degree " + std::to_string(k));
  }
  boundaries_.push_back(SparseIntMatrix(0, 1));
  for (std::size_t k = 1; k < bases_.size(); ++k)
    boundaries_.push_back(assemble_boundary(bases_[k], bases_[k - 1], alphabet_));
  if (complete_) boundaries_.push_back(SparseIntMatrix(bases_.back().size(), 0));
}

void ChainComplexRep::check_degree(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  if (k > top_degree() && !complete_)
    throw Error(ErrorCode::TruncationError, "degree beyond the truncation of this complex",
                "degree " + std::to_string(k) + ", truncated at " + std::to_string(top_degree()));
}

const std::vector<Word>& ChainComplexRep::basis(int k) const {
  check_degree(k);
  if (k > top_degree()) return empty_;
  return bases_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> ChainComplexRep::basis_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& b : bases_) out.push_back(b.size());
  return out;
}

std::size_t ChainComplexRep::total_size() const {
  std::size_t n = 0;
  for (const auto& b : bases_) n += b.size();
  return n;
}

const SparseIntMatrix& ChainComplexRep::boundary_matrix(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  if (static_cast<std::size_t>(k) >= boundaries_.size())
    throw Error(ErrorCode::TruncationError, "boundary matrix beyond the materialized degrees",
                "d_" + std::to_string(k) + " requested, top degree " + std::to_string(top_degree()));
  return boundaries_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> ChainComplexRep::index_of(int k, const Word& w) const {
  const auto& b = basis(k);
  auto it = std::lower_bound(b.begin(), b.end(), w);
  if (it == b.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - b.begin());
}

std::vector<Integer> ChainComplexRep::coordinates(const Chain& c) const {
  const int k = c.degree();
  std::vector<Integer> out(k >= 0 ? basis(k).size() : 0);
  for (const auto& [w, coeff] : c) {
    auto idx = index_of(k, w);
    if (!idx) throw Error(ErrorCode::InvalidInput, "chain term is not a basis word", alphabet_.describe(w));
    out[*idx] = coeff;
  }
  return out;
}

Chain ChainComplexRep::chain_from_coordinates(int k, const std::vector<Integer>& coords) const {
  const auto& b = basis(k);
  if (coords.size() != b.size()) throw Error(ErrorCode::InvalidInput, "coordinate vector has wrong length");
  Chain c(k);
  for (std::size_t i = 0; i < b.size(); ++i) c.add(b[i], coords[i]);
  return c;
}

// ---------------------------------------------------------------------------

ChainComplexRep build_injective(int m, const ResourceLimits& limits) {
  if (m < 1 || m > 8)
    throw Error(ErrorCode::InvalidInput, "injective complex needs 1 <= m <= 8", "m=" + std::to_string(m));
  const Alphabet alphabet = Alphabet::letters(m);
  const auto symbols = alphabet.symbols();
  std::vector<std::vector<Word>> bases{{Word{}}};
  std::size_t total = 1;
  for (int k = 1; k <= m; ++k) {
    std::vector<Word> next;
    for (const Word& w : bases.back()) {
      for (Symbol s : symbols) {
        if (std::find(w.begin(), w.end(), s) != w.end()) continue;
        Word e = w;
        e.push_back(s);
        next.push_back(std::move(e));
      }
    }
    total += next.size();
    check_budget(total, limits);
    bases.push_back(std::move(next));
  }
  return ChainComplexRep(alphabet, std::move(bases), true, "injective m=" + std::to_string(m));
}

ChainComplexRep build_full(int m, int max_degree, const ResourceLimits& limits) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "alphabet size must be >= 1", "m=" + std::to_string(m));
  if (max_degree < 0) throw Error(ErrorCode::InvalidInput, "max degree must be >= 0");
  std::size_t total = 1, layer = 1;
  for (int k = 1; k <= max_degree; ++k) {
    layer *= static_cast<std::size_t>(m);
    total += layer;
    check_budget(total, limits);
  }
  const Alphabet alphabet = Alphabet::letters(m);
  const auto symbols = alphabet.symbols();
  std::vector<std::vector<Word>> bases{{Word{}}};
  for (int k = 1; k <= max_degree; ++k) {
    std::vector<Word> next;
    next.reserve(bases.back().size() * symbols.size());
    for (const Word& w : bases.back()) {
      for (Symbol s : symbols) {
        Word e = w;
        e.push_back(s);
        next.push_back(std::move(e));
      }
    }
    bases.push_back(std::move(next));
  }
  return ChainComplexRep(alphabet, std::move(bases), false,
                         "full m=" + std::to_string(m) + " max_degree=" + std::to_string(max_degree));
}

ChainComplexRep build_gp(const GeneralPositionRelation& G, const Word& base, std::optional<int> max_degree,
                         const ResourceLimits& limits) {
  const Alphabet& alphabet = G.alphabet();
  for (Symbol s : base)
    if (!alphabet.contains(s)) throw Error(ErrorCode::InvalidInput, "base symbol outside the alphabet");
  if (!max_degree && !G.bounded())
    throw Error(ErrorCode::ResourceLimit, "relation is not known to be bounded; pass a max degree", G.name());
  if (max_degree && *max_degree < 0) throw Error(ErrorCode::InvalidInput, "max degree must be >= 0");

  const auto symbols = alphabet.symbols();
  // a word is admissible only if each prefix is, so extend level by level
  auto extend = [&](const std::vector<Word>& level, bool first_only) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (Symbol s : symbols) {
        Word e = w;
        e.push_back(s);
        if (!G(e, base)) continue;
        next.push_back(std::move(e));
        if (first_only) return next;
      }
    }
    return next;
  };

  std::vector<std::vector<Word>> bases{{Word{}}};
  std::size_t total = 1;
  bool complete = false;
  while (true) {
    const int k = static_cast<int>(bases.size());
    if (max_degree && k > *max_degree) {
      complete = extend(bases.back(), true).empty();
      break;
    }
    auto next = extend(bases.back(), false);
    if (next.empty()) {
      complete = true;
      break;
    }
    total += next.size();
    check_budget(total, limits);
    bases.push_back(std::move(next));
  }
  std::string label = "gp relation=" + G.name() + " base=" + alphabet.describe(base);
  return ChainComplexRep(alphabet, std::move(bases), complete, std::move(label));
}

}  // namespace wordhom
