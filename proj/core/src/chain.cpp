#include "wordhom/chain.hpp"

#include "wordhom/error.hpp"

#include <algorithm>

namespace wordhom {

Chain::Chain(int degree) : degree_(degree) {
  if (degree < -1) throw Error(ErrorCode::InvalidInput, "chain degree must be >= -1");
}

Chain Chain::term(Word word, Integer coeff) {
  Chain c(static_cast<int>(word.size()));
  c.add(word, coeff);
  return c;
}

Integer Chain::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Chain::add(const Word& word, const Integer& coeff) {
  if (static_cast<int>(word.size()) != degree_)
    throw Error(ErrorCode::InvalidInput, "word length does not match chain degree",
                "degree=" + std::to_string(degree_) + " length=" + std::to_string(word.size()));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Chain::require_degree(int other, const char* op) const {
  if (other != degree_)
    throw Error(ErrorCode::InvalidInput, std::string("degree mismatch in chain ") + op,
                std::to_string(degree_) + " vs " + std::to_string(other));
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && other.degree_ != degree_) degree_ = other.degree_;
  require_degree(other.degree_, "sum");
  for (const auto& [w, k] : other.terms_) add(w, k);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && other.degree_ != degree_) degree_ = other.degree_;
  require_degree(other.degree_, "difference");
  for (const auto& [w, k] : other.terms_) add(w, -k);
  return *this;
}

Chain& Chain::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, k] : terms_) k *= scalar;
  return *this;
}

bool operator==(const Chain& a, const Chain& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Word delete_entry(const Word& w, std::size_t index) {
  Word out;
  out.reserve(w.size() - 1);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != index) out.push_back(w[i]);
  return out;
}

Chain boundary(const Chain& c) {
  if (c.degree() <= 0) return Chain(-1);
  Chain out(c.degree() - 1);
  for (const auto& [w, k] : c) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      // position j (0-based) carries sign (-1)^j, i.e. (-1)^{j+1} for 1-based j
      out.add(delete_entry(w, j), (j % 2 == 0) ? k : Integer(-k));
    }
  }
  return out;
}

Chain product(const Chain& left, const Chain& right, ProductMode mode) {
  if (mode == ProductMode::Disjoint) {
    auto a = appearing_symbols(left);
    for (Symbol s : appearing_symbols(right)) {
      if (a.count(s))
        throw Error(ErrorCode::DisjointnessViolation, "symbol appears in both factors of a disjoint product",
                    "symbol=" + std::to_string(s.code));
    }
  }
  Chain out(left.degree() + right.degree());
  if (left.degree() < 0 || right.degree() < 0) return out;
  for (const auto& [u, a] : left) {
    for (const auto& [v, b] : right) {
      Word w;
      w.reserve(u.size() + v.size());
      w.insert(w.end(), u.begin(), u.end());
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, a * b);
    }
  }
  return out;
}

Chain prepend(const Word& prefix, const Chain& c) {
  if (c.degree() < 0) return Chain(-1);
  Chain out(c.degree() + static_cast<int>(prefix.size()));
  for (const auto& [v, k] : c) {
    Word w = prefix;
    w.insert(w.end(), v.begin(), v.end());
    out.add(w, k);
  }
  return out;
}

std::set<Symbol> appearing_symbols(const Chain& c) {
  std::set<Symbol> out;
  for (const auto& [w, k] : c) out.insert(w.begin(), w.end());
  return out;
}

bool appears_in(Symbol s, const Chain& c) {
  for (const auto& [w, k] : c)
    if (std::find(w.begin(), w.end(), s) != w.end()) return true;
  return false;
}

}  // namespace wordhom
