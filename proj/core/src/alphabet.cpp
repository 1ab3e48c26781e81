#include "wordhom/alphabet.hpp"

#include "wordhom/error.hpp"

#include <sstream>

namespace wordhom {

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Alphabet Alphabet::letters(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "letter alphabet needs m >= 1", "m=" + std::to_string(m));
  return Alphabet(AlphabetKind::Letters, m, 0, 0);
}

Alphabet Alphabet::vectors(int p, int dim) {
  if (!is_prime(p) || p > 13)
    throw Error(ErrorCode::InvalidInput, "vector alphabet needs a prime p <= 13", "p=" + std::to_string(p));
  if (dim < 1 || dim > 6)
    throw Error(ErrorCode::InvalidInput, "vector alphabet needs 1 <= dim <= 6", "dim=" + std::to_string(dim));
  return Alphabet(AlphabetKind::Vectors, 0, p, dim);
}

std::size_t Alphabet::size() const noexcept {
  if (is_letters()) return static_cast<std::size_t>(m_);
  std::size_t n = 1;
  for (int i = 0; i < dim_; ++i) n *= static_cast<std::size_t>(p_);
  return n;
}

bool Alphabet::contains(Symbol s) const noexcept {
  if (is_letters()) return s.code >= 1 && s.code <= static_cast<std::uint32_t>(m_);
  return s.code < size();
}

std::vector<Symbol> Alphabet::symbols() const {
  std::vector<Symbol> out;
  out.reserve(size());
  if (is_letters()) {
    for (int v = 1; v <= m_; ++v) out.push_back(Symbol{static_cast<std::uint32_t>(v)});
  } else {
    for (std::uint32_t c = 0; c < size(); ++c) out.push_back(Symbol{c});
  }
  return out;
}

std::vector<Symbol> Alphabet::projective_points() const {
  if (!is_vectors()) throw Error(ErrorCode::InvalidInput, "projective points need a vector alphabet");
  std::vector<Symbol> out;
  for (std::uint32_t c = 1; c < size(); ++c) {
    if (projective_representative(Symbol{c}).code == c) out.push_back(Symbol{c});
  }
  return out;
}

std::vector<int> Alphabet::coordinates(Symbol s) const {
  if (!is_vectors()) throw Error(ErrorCode::InvalidInput, "coordinates need a vector alphabet");
  std::vector<int> coords(static_cast<std::size_t>(dim_));
  std::uint32_t c = s.code;
  for (int i = dim_ - 1; i >= 0; --i) {
    coords[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint32_t>(p_));
    c /= static_cast<std::uint32_t>(p_);
  }
  return coords;
}

Symbol Alphabet::from_coordinates(std::span<const int> coords) const {
  if (!is_vectors()) throw Error(ErrorCode::InvalidInput, "coordinates need a vector alphabet");
  if (coords.size() != static_cast<std::size_t>(dim_))
    throw Error(ErrorCode::InvalidInput, "vector has wrong dimension",
                "expected " + std::to_string(dim_) + ", got " + std::to_string(coords.size()));
  std::uint32_t c = 0;
  for (int v : coords) {
    int r = ((v % p_) + p_) % p_;
    c = c * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(r);
  }
  return Symbol{c};
}

Symbol Alphabet::letter(int value) const {
  if (!is_letters() || value < 1 || value > m_)
    throw Error(ErrorCode::InvalidInput, "letter out of range", "letter=" + std::to_string(value));
  return Symbol{static_cast<std::uint32_t>(value)};
}

bool Alphabet::is_zero_vector(Symbol s) const { return is_vectors() && s.code == 0; }

Symbol Alphabet::scaled(Symbol s, int factor) const {
  auto coords = coordinates(s);
  for (int& v : coords) v = (v * factor) % p_;
  return from_coordinates(coords);
}

Symbol Alphabet::projective_representative(Symbol s) const {
  auto coords = coordinates(s);
  for (int v : coords) {
    if (v == 0) continue;
    // inverse of the leading coefficient
    for (int inv = 1; inv < p_; ++inv)
      if ((v * inv) % p_ == 1) return scaled(s, inv);
  }
  return s;
}

std::string Alphabet::describe(Symbol s) const {
  if (is_letters()) return std::to_string(s.code);
  std::ostringstream os;
  os << '[';
  auto coords = coordinates(s);
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ']';
  return os.str();
}

std::string Alphabet::describe(const Word& w) const {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += describe(w[i]);
  }
  return out + ")";
}

}  // namespace wordhom
