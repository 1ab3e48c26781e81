#include "wordhom/genpos.hpp"

#include "wordhom/error.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace wordhom {

bool gp_inj(std::span<const Symbol> x, std::span<const Symbol> y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) return false;
    if (std::find(y.begin(), y.end(), x[i]) != y.end()) return false;
  }
  return true;
}

namespace {

using Row = std::vector<int>;

int rank_of_rows(std::vector<Row> rows, int p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    Row& pr = rows[static_cast<std::size_t>(rank)];
    int inv = 1;
    while ((pr[c] * inv) % p != 1) ++inv;
    for (int& v : pr) v = (v * inv) % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      int f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * pr[k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Calls visit(indices) for each k-subset of {0..n-1} in lexicographic order;
// stops early when visit returns false.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) return true;
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int rank_mod_p(const Alphabet& alphabet, std::span<const Symbol> vectors) {
  std::vector<Row> rows;
  rows.reserve(vectors.size());
  for (Symbol s : vectors) rows.push_back(alphabet.coordinates(s));
  return rank_of_rows(std::move(rows), alphabet.prime());
}

bool gp_vec(const Alphabet& alphabet, std::span<const Symbol> x, std::span<const Symbol> y) {
  if (!alphabet.is_vectors()) throw Error(ErrorCode::InvalidInput, "gp_vec needs a vector alphabet");
  for (auto s : x)
    if (!alphabet.contains(s)) throw Error(ErrorCode::InvalidInput, "vector outside the alphabet");
  for (auto s : y)
    if (!alphabet.contains(s)) throw Error(ErrorCode::InvalidInput, "vector outside the alphabet");

  const int p = alphabet.prime();
  const std::size_t d = static_cast<std::size_t>(alphabet.dim());
  std::vector<Row> all;
  all.reserve(x.size() + y.size());
  for (Symbol s : x) all.push_back(alphabet.coordinates(s));
  for (Symbol s : y) all.push_back(alphabet.coordinates(s));

  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].code == 0) return false;
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(j);
    // span is monotone, so only the largest admissible subsets matter
    const std::size_t k = std::min(d - 1, others.size());
    bool free = for_each_subset(others.size(), k, [&](std::span<const std::size_t> pick) {
      std::vector<Row> rows;
      for (std::size_t t : pick) rows.push_back(all[others[t]]);
      int base = rank_of_rows(rows, p);
      rows.push_back(all[i]);
      return rank_of_rows(std::move(rows), p) > base;
    });
    if (!free) return false;
  }
  return true;
}

InjectiveRelation::InjectiveRelation(int m) : GeneralPositionRelation(Alphabet::letters(m)) {}

InjectiveRelation::InjectiveRelation(const Alphabet& letters) : GeneralPositionRelation(letters) {
  if (!letters.is_letters()) throw Error(ErrorCode::InvalidInput, "injective relation needs a letter alphabet");
}

VectorRelation::VectorRelation(int p, int dim) : GeneralPositionRelation(Alphabet::vectors(p, dim)) {}

VectorRelation::VectorRelation(const Alphabet& vectors) : GeneralPositionRelation(vectors) {
  if (!vectors.is_vectors()) throw Error(ErrorCode::InvalidInput, "vector relation needs a vector alphabet");
}

PredicateRelation::PredicateRelation(Alphabet alphabet, Predicate predicate, std::string name, bool set_sufficient,
                                     bool bounded)
    : GeneralPositionRelation(std::move(alphabet)),
      predicate_(std::move(predicate)),
      name_(std::move(name)),
      set_sufficient_(set_sufficient),
      bounded_(bounded) {}

// ---------------------------------------------------------------------------

bool is_blocking(const GeneralPositionRelation& G, std::span<const Symbol> sequence,
                 std::span<const Symbol> candidates) {
  for (Symbol y : candidates) {
    const Symbol single[1] = {y};
    if (G(single, sequence)) return false;
  }
  return true;
}

namespace {

// Lexicographically least blocking sequence of length n whose first universe
// index is `first`, or nullopt.
std::optional<Word> search_branch(const GeneralPositionRelation& G, std::span<const Symbol> universe, std::size_t n,
                                  std::size_t first, bool subsets) {
  const std::size_t u = universe.size();
  std::vector<std::size_t> idx(n);
  Word seq(n);
  idx[0] = first;
  // initialise the tail to its lexicographically least value
  for (std::size_t i = 1; i < n; ++i) idx[i] = subsets ? idx[i - 1] + 1 : 0;
  if (subsets && n > 0 && idx[n - 1] >= u) return std::nullopt;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) seq[i] = universe[idx[i]];
    if (is_blocking(G, seq, universe)) return seq;
    // advance positions 1..n-1 only
    std::size_t i = n;
    while (i > 1) {
      const std::size_t limit = subsets ? u - (n - i) : u;
      if (idx[i - 1] + 1 < limit) break;
      --i;
    }
    if (i <= 1) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = subsets ? idx[j - 1] + 1 : 0;
  }
}

}  // namespace

GpOrderResult gp_order(const GeneralPositionRelation& G, std::span<const Symbol> universe,
                       const GpOrderOptions& options) {
  if (universe.empty()) throw Error(ErrorCode::InvalidInput, "gp_order needs a nonempty universe");
  std::vector<Symbol> sorted(universe.begin(), universe.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const bool subsets = options.set_sufficient.value_or(G.set_sufficient());
  const unsigned jobs = std::max(1u, options.jobs);

  if (is_blocking(G, {}, sorted)) return {true, 0, {}};

  for (std::size_t n = 1; n <= options.max_n; ++n) {
    if (subsets && n > sorted.size()) break;
    const std::size_t branches = subsets ? sorted.size() - n + 1 : sorted.size();
    std::vector<std::optional<Word>> found(branches);
    if (jobs == 1) {
      for (std::size_t b = 0; b < branches; ++b) {
        found[b] = search_branch(G, sorted, n, b, subsets);
        if (found[b]) break;
      }
    } else {
      for (std::size_t start = 0; start < branches; start += jobs) {
        std::vector<std::future<std::optional<Word>>> tasks;
        for (std::size_t b = start; b < std::min(branches, start + jobs); ++b)
          tasks.push_back(std::async(std::launch::async, [&, b] { return search_branch(G, sorted, n, b, subsets); }));
        bool any = false;
        for (std::size_t k = 0; k < tasks.size(); ++k) {
          found[start + k] = tasks[k].get();
          any = any || found[start + k].has_value();
        }
        if (any) break;
      }
    }
    for (auto& f : found)
      if (f) return {true, n, std::move(*f)};
  }
  // subsets exhausted: nothing blocks, the order exceeds every searched length
  return {false, options.max_n + 1, {}};
}

GpOrderResult gp_order(const GeneralPositionRelation& G, const GpOrderOptions& options) {
  auto universe = G.search_universe();
  return gp_order(G, universe, options);
}

// ---------------------------------------------------------------------------

TripleSampler default_sampler(const GeneralPositionRelation& G) {
  auto universe = G.alphabet().symbols();
  return [&G, universe](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
    std::uniform_int_distribution<int> len_x(0, 3);
    std::uniform_int_distribution<int> len_yz(0, 3);
    std::bernoulli_distribution biased(0.5);
    const auto l = static_cast<std::size_t>(len_x(rng));
    const auto m = static_cast<std::size_t>(len_yz(rng));
    const auto n = static_cast<std::size_t>(len_yz(rng));
    const bool greedy = biased(rng);

    Word all;
    all.reserve(l + m + n);
    for (std::size_t i = 0; i < l + m + n; ++i) {
      Symbol s = universe[pick(rng)];
      if (greedy) {
        for (int attempt = 0; attempt < 32; ++attempt) {
          Word trial = all;
          trial.push_back(s);
          if (G(trial, {})) break;
          s = universe[pick(rng)];
        }
      }
      all.push_back(s);
    }
    AxiomTriple t;
    t.x.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(l));
    t.y.assign(all.begin() + static_cast<std::ptrdiff_t>(l), all.begin() + static_cast<std::ptrdiff_t>(l + m));
    t.z.assign(all.begin() + static_cast<std::ptrdiff_t>(l + m), all.end());
    return t;
  };
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

AxiomReport check_axioms(const GeneralPositionRelation& G, const TripleSampler& sampler, std::size_t trials,
                         std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "check_axioms needs at least one trial");
  AxiomReport report;
  report.relation = G.name();
  report.trials = trials;
  report.seed = seed;
  std::mt19937_64 rng(seed);

  auto violate = [&](const char* axiom, const AxiomTriple& t, std::string detail) {
    ++report.violations;
    if (!report.counterexample) report.counterexample = AxiomViolation{axiom, t, std::move(detail)};
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const AxiomTriple t = sampler(rng);
    const Word yz = concat(t.y, t.z);
    const Word xy = concat(t.x, t.y);

    // (i) symmetry within each block: every permutation of x and of y for G(x; y),
    // one random permutation of each block for G(x; y, z)
    {
      const bool ref = G(t.x, t.y);
      Word px = t.x;
      std::sort(px.begin(), px.end());
      bool ok = true;
      do {
        Word py = t.y;
        std::sort(py.begin(), py.end());
        do {
          if (G(px, py) != ref) ok = false;
        } while (ok && std::next_permutation(py.begin(), py.end()));
      } while (ok && std::next_permutation(px.begin(), px.end()));
      if (!ok) violate("i", t, "G(x;y) changes under permuting x or y");

      Word sx = t.x, syz = yz;
      std::shuffle(sx.begin(), sx.end(), rng);
      std::shuffle(syz.begin(), syz.end(), rng);
      if (G(sx, syz) != G(t.x, yz)) violate("i", t, "G(x;y,z) changes under permuting x or (y,z)");
    }

    const bool g_xy_z = G(xy, t.z);
    const bool g_x_yz = G(t.x, yz);
    const bool g_x_z = G(t.x, t.z);
    const bool g_y_z = G(t.y, t.z);

    // (ii) G(x,y; z) => G(x; y,z)
    if (g_xy_z) {
      ++report.weakening_xy_exercised;
      if (!g_x_yz) violate("ii.a", t, "G(x,y;z) holds but G(x;y,z) fails");
    }
    // (ii) G(x; y,z) => G(x; z)
    if (g_x_yz) {
      ++report.weakening_drop_exercised;
      if (!g_x_z) violate("ii.b", t, "G(x;y,z) holds but G(x;z) fails");
    }
    // (iii) G(x; y,z) and G(y; z) => G(x,y; z)
    if (g_x_yz && g_y_z) {
      ++report.composition_exercised;
      if (!g_xy_z) violate("iii", t, "G(x;y,z) and G(y;z) hold but G(x,y;z) fails");
    }
  }
  return report;
}

}  // namespace wordhom
