#include "wordhom/filler.hpp"

#include "wordhom/error.hpp"

#include <algorithm>
#include <map>

namespace wordhom {

FillCertificate::FillCertificate(Chain input, Chain filling, std::vector<FillStep> steps)
    : input_(std::move(input)), filling_(std::move(filling)), steps_(std::move(steps)) {
  if (!verify()) throw Error(ErrorCode::VerificationFailed, "boundary of the filling differs from the cycle");
}

bool FillCertificate::verify() const {
  if (!filling_.is_zero() && filling_.degree() != input_.degree() + 1) return false;
  return boundary(filling_) == input_;
}

namespace {

void require_cycle(const Chain& c) {
  if (!boundary(c).is_zero()) throw Error(ErrorCode::NotACycle, "input chain is not a cycle");
}

Word tail(const Word& w, std::size_t from) { return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.end()); }

Word head(const Word& w, std::size_t len) { return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)); }

Chain append(const Chain& c, const Word& suffix) {
  if (c.degree() < 0) return Chain(-1);
  Chain out(c.degree() + static_cast<int>(suffix.size()));
  for (const auto& [w, k] : c) {
    Word e = w;
    e.insert(e.end(), suffix.begin(), suffix.end());
    out.add(e, k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// injective words

class InjectiveFiller {
 public:
  explicit InjectiveFiller(std::vector<FillStep>& steps) : steps_(steps) {}

  // letters: sorted set the words of c draw from; requires degree < |letters|
  Chain fill(const Chain& c, const std::vector<Symbol>& letters, int depth) {
    const int n = c.degree();
    if (c.is_zero()) return Chain(n + 1);
    if (static_cast<std::size_t>(n) >= letters.size())
      throw Error(ErrorCode::InternalInvariantBroken, "recursive fill outside the exact range");

    const auto appearing = appearing_symbols(c);
    const Symbol x = appearing.empty() ? letters.front() : *appearing.begin();

    Chain work = c;
    Chain z(n + 1);
    for (int i = 0; i < n && appears_in(x, work); ++i) {
      Chain zi(n + 1);
      std::size_t blocks = 0;
      if (i == 0) {
        for (const auto& [w, k] : work) {
          if (w.front() != x) continue;
          const Word rest = tail(w, 1);
          auto fresh = std::find_if(letters.begin(), letters.end(), [&](Symbol s) {
            return s != x && std::find(rest.begin(), rest.end(), s) == rest.end();
          });
          Word t{*fresh, x};
          t.insert(t.end(), rest.begin(), rest.end());
          zi.add(t, k);
          ++blocks;
        }
        steps_.push_back({depth, "shift", n, 0, x, blocks});
      } else {
        // c = sum_j s_j (x) c_j + c', grouped by the suffix after x
        std::map<Word, Chain> groups;
        for (const auto& [w, k] : work) {
          if (w[static_cast<std::size_t>(i)] != x) continue;
          auto [it, fresh] = groups.try_emplace(tail(w, static_cast<std::size_t>(i) + 1), Chain(i));
          it->second.add(head(w, static_cast<std::size_t>(i)), k);
        }
        for (const auto& [suffix, s] : groups) {
          if (!boundary(s).is_zero())
            throw Error(ErrorCode::InternalInvariantBroken, "extracted prefix block is not a cycle",
                        "stage " + std::to_string(i));
          if (s.degree() >= n) throw Error(ErrorCode::InternalInvariantBroken, "recursion did not lower the degree");
          std::vector<Symbol> sub;
          for (Symbol l : letters)
            if (l != x && std::find(suffix.begin(), suffix.end(), l) == suffix.end()) sub.push_back(l);
          Chain lifted = fill(s, sub, depth + 1);
          Word xs{x};
          xs.insert(xs.end(), suffix.begin(), suffix.end());
          zi += append(lifted, xs);
          ++blocks;
        }
        steps_.push_back({depth, "stage", n, i, x, blocks});
      }
      work -= boundary(zi);
      z += zi;
      for (const auto& [w, k] : work) {
        auto pos = std::find(w.begin(), w.end(), x);
        if (pos != w.end() && pos - w.begin() <= i)
          throw Error(ErrorCode::InternalInvariantBroken, "pushed symbol still within the cleared prefix",
                      "stage " + std::to_string(i));
      }
    }
    if (appears_in(x, work)) throw Error(ErrorCode::InternalInvariantBroken, "pushed symbol did not vanish");
    steps_.push_back({depth, "cone", n, n, x, work.size()});
    z += prepend(Word{x}, work);
    return z;
  }

 private:
  std::vector<FillStep>& steps_;
};

// ---------------------------------------------------------------------------
// general position

class GpFiller {
 public:
  GpFiller(const GeneralPositionRelation& G, std::vector<FillStep>& steps)
      : G_(G), symbols_(G.alphabet().symbols()), steps_(steps) {}

  Chain fill(const Chain& c, const Word& a, int depth) {
    const int n = c.degree();
    if (c.is_zero()) return Chain(n + 1);

    const Symbol x = pick([&](Symbol s) { return G_(Word{s}, a); }, "no symbol in general position to the base");

    Chain work = c;
    Chain z(n + 1);
    std::size_t current = i_invariant(work, x, a, G_);
    int rounds = 0;
    while (current < static_cast<std::size_t>(n)) {
      if (++rounds > n) throw Error(ErrorCode::InternalInvariantBroken, "I(c) failed to reach the degree");
      Chain zi(n + 1);
      std::size_t blocks = 0;
      if (current == 0) {
        for (const auto& [w, k] : work) {
          Word ctx{x};
          ctx.insert(ctx.end(), w.begin(), w.end());
          ctx.insert(ctx.end(), a.begin(), a.end());
          const Symbol y = pick([&](Symbol s) { return G_(Word{s}, ctx); },
                                "no symbol in general position to (x, term, base)");
          Word t{y};
          t.insert(t.end(), w.begin(), w.end());
          zi.add(t, k);
          ++blocks;
        }
        steps_.push_back({depth, "shift", n, 0, x, blocks});
      } else {
        const std::size_t i = current;
        std::map<Word, Chain> groups;
        for (const auto& [w, k] : work) {
          if (i_invariant(w, x, a, G_) != i) continue;
          auto [it, fresh] = groups.try_emplace(tail(w, i), Chain(static_cast<int>(i)));
          it->second.add(head(w, i), k);
        }
        for (const auto& [suffix, s] : groups) {
          if (!boundary(s).is_zero())
            throw Error(ErrorCode::InternalInvariantBroken, "extracted prefix block is not a cycle",
                        "I(c)=" + std::to_string(i));
          Word extended{x};
          extended.insert(extended.end(), suffix.begin(), suffix.end());
          extended.insert(extended.end(), a.begin(), a.end());
          Chain lifted = fill(s, extended, depth + 1);
          zi += append(lifted, suffix);
          ++blocks;
        }
        steps_.push_back({depth, "lift", n, static_cast<int>(i), x, blocks});
      }
      work -= boundary(zi);
      z += zi;
      const std::size_t next = i_invariant(work, x, a, G_);
      if (next <= current) throw Error(ErrorCode::InternalInvariantBroken, "I(c) did not increase");
      current = next;
    }
    steps_.push_back({depth, "cone", n, n, x, work.size()});
    z += prepend(Word{x}, work);
    return z;
  }

 private:
  template <class Pred>
  Symbol pick(Pred&& ok, const char* what) const {
    for (Symbol s : symbols_)
      if (ok(s)) return s;
    throw Error(ErrorCode::GeneralPositionExhausted, what);
  }

  const GeneralPositionRelation& G_;
  std::vector<Symbol> symbols_;
  std::vector<FillStep>& steps_;
};

}  // namespace

FillCertificate fill_absent(const Chain& c, Symbol x) {
  if (appears_in(x, c)) throw Error(ErrorCode::PreconditionViolated, "symbol appears in the chain",
                                    "symbol=" + std::to_string(x.code));
  require_cycle(c);
  std::vector<FillStep> steps{{0, "cone", c.degree(), c.degree(), x, c.size()}};
  return FillCertificate(c, prepend(Word{x}, c), std::move(steps));
}

FillCertificate fill_injective(const Chain& c, int m) {
  const Alphabet alphabet = Alphabet::letters(m);
  for (const auto& [w, k] : c) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!alphabet.contains(w[i])) throw Error(ErrorCode::InvalidInput, "letter outside 1..m", alphabet.describe(w));
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] == w[j]) throw Error(ErrorCode::InvalidInput, "word is not injective", alphabet.describe(w));
    }
  }
  if (c.degree() >= m)
    throw Error(ErrorCode::OutOfRange, "cycle degree must be below the alphabet size",
                "degree " + std::to_string(c.degree()) + ", m=" + std::to_string(m));
  require_cycle(c);
  std::vector<FillStep> steps;
  InjectiveFiller filler(steps);
  Chain z = filler.fill(c, alphabet.symbols(), 0);
  return FillCertificate(c, std::move(z), std::move(steps));
}

std::size_t i_invariant(const Word& v, Symbol x, const Word& a, const GeneralPositionRelation& G) {
  for (std::size_t i = v.size(); i > 0; --i) {
    Word ctx{x};
    ctx.insert(ctx.end(), v.begin() + static_cast<std::ptrdiff_t>(i), v.end());
    ctx.insert(ctx.end(), a.begin(), a.end());
    if (G(std::span<const Symbol>(v.data(), i), ctx)) return i;
  }
  return 0;
}

std::size_t i_invariant(const Chain& c, Symbol x, const Word& a, const GeneralPositionRelation& G) {
  std::size_t best = c.degree() < 0 ? 0 : static_cast<std::size_t>(c.degree());
  for (const auto& [w, k] : c) best = std::min(best, i_invariant(w, x, a, G));
  return best;
}

FillCertificate fill_gp(const Chain& c, const GeneralPositionRelation& G, const Word& a, const FillGpOptions& options) {
  const Alphabet& alphabet = G.alphabet();
  for (Symbol s : a)
    if (!alphabet.contains(s)) throw Error(ErrorCode::InvalidInput, "base symbol outside the alphabet");
  for (const auto& [w, k] : c) {
    for (Symbol s : w)
      if (!alphabet.contains(s)) throw Error(ErrorCode::InvalidInput, "symbol outside the alphabet", alphabet.describe(w));
    if (!G(w, a))
      throw Error(ErrorCode::PreconditionViolated, "term is not in general position to the base",
                  alphabet.describe(w) + " vs " + alphabet.describe(a));
  }
  require_cycle(c);

  if (options.enforce_range) {
    const std::size_t order = options.order ? *options.order : gp_order(G).value;
    const std::size_t need = 2 * static_cast<std::size_t>(std::max(c.degree(), 0)) + a.size() + 1;
    if (need > order)
      throw Error(ErrorCode::OutOfRange, "cycle degree outside the vanishing range 2n + l + 1 <= |G|",
                  "n=" + std::to_string(c.degree()) + " l=" + std::to_string(a.size()) +
                      " |G|=" + std::to_string(order));
  }
  std::vector<FillStep> steps;
  GpFiller filler(G, steps);
  Chain z = filler.fill(c, a, 0);
  return FillCertificate(c, std::move(z), std::move(steps));
}

}  // namespace wordhom
