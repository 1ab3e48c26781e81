#include "wordhom/json_io.hpp"

#include <limits>

namespace wordhom {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json alphabet_to_json(const Alphabet& alphabet) {
  if (alphabet.is_letters()) return {{"kind", "letters"}, {"m", alphabet.letter_count()}};
  return {{"kind", "vectors"}, {"p", alphabet.prime()}, {"dim", alphabet.dim()}};
}

Alphabet alphabet_from_json(const json& j) {
  try {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "letters") return Alphabet::letters(field(j, "m").get<int>());
    if (kind == "vectors") return Alphabet::vectors(field(j, "p").get<int>(), field(j, "dim").get<int>());
  } catch (const json::exception& e) {
    bad(std::string("malformed alphabet: ") + e.what());
  }
  bad("alphabet kind must be \"letters\" or \"vectors\"");
}

json symbol_to_json(const Alphabet& alphabet, Symbol s) {
  if (alphabet.is_letters()) return s.code;
  return alphabet.coordinates(s);
}

Symbol symbol_from_json(const Alphabet& alphabet, const json& j) {
  try {
    if (alphabet.is_letters()) {
      if (!j.is_number_integer()) bad("letter symbols are integers");
      return alphabet.letter(j.get<int>());
    }
    if (!j.is_array()) bad("vector symbols are arrays of integers");
    auto coords = j.get<std::vector<int>>();
    for (int v : coords)
      if (v < 0 || v >= alphabet.prime()) bad("vector entries must be reduced mod p");
    return alphabet.from_coordinates(coords);
  } catch (const json::exception& e) {
    bad(std::string("malformed symbol: ") + e.what());
  }
}

json word_to_json(const Alphabet& alphabet, const Word& w) {
  json out = json::array();
  for (Symbol s : w) out.push_back(symbol_to_json(alphabet, s));
  return out;
}

Word word_from_json(const Alphabet& alphabet, const json& j) {
  if (!j.is_array()) bad("words are arrays of symbols");
  Word w;
  for (const auto& s : j) w.push_back(symbol_from_json(alphabet, s));
  return w;
}

json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      bad("coefficient string is not a decimal integer");
    return Integer(s);
  }
  bad("coefficients are integers");
}

json chain_to_json(const Alphabet& alphabet, const Chain& c) {
  json terms = json::array();
  for (const auto& [w, k] : c) terms.push_back({{"coeff", integer_to_json(k)}, {"word", word_to_json(alphabet, w)}});
  return {{"alphabet", alphabet_to_json(alphabet)}, {"degree", c.degree()}, {"terms", terms}};
}

ChainDocument chain_from_json(const json& j) {
  Alphabet alphabet = alphabet_from_json(field(j, "alphabet"));
  const json& deg = field(j, "degree");
  if (!deg.is_number_integer() || deg.get<int>() < -1) bad("degree must be an integer >= -1");
  Chain c(deg.get<int>());
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& t : terms) {
    Word w = word_from_json(alphabet, field(t, "word"));
    if (static_cast<int>(w.size()) != c.degree()) bad("term word length differs from the chain degree");
    c.add(w, integer_from_json(field(t, "coeff")));
  }
  std::optional<Word> base;
  if (j.contains("base")) base = word_from_json(alphabet, j.at("base"));
  return {alphabet, std::move(c), std::move(base)};
}

json certificate_to_json(const Alphabet& alphabet, const FillCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps()) {
    steps.push_back({{"depth", s.depth},
                     {"action", s.action},
                     {"degree", s.degree},
                     {"stage", s.stage},
                     {"symbol", symbol_to_json(alphabet, s.symbol)},
                     {"terms", s.terms}});
  }
  return {{"input", chain_to_json(alphabet, cert.input())},
          {"filling", chain_to_json(alphabet, cert.filling())},
          {"steps", steps},
          {"valid", cert.verify()}};
}

CertificateDocument certificate_from_json(const json& j) {
  auto input = chain_from_json(field(j, "input"));
  auto filling = chain_from_json(field(j, "filling"));
  if (!(input.alphabet == filling.alphabet)) bad("input and filling use different alphabets");
  return {input.alphabet, std::move(input.chain), std::move(filling.chain)};
}

json homology_to_json(const HomologyGroup& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(integer_to_json(t));
  return {{"free_rank", h.free_rank}, {"torsion", torsion}, {"text", h.to_string()}};
}

json gp_order_to_json(const Alphabet& alphabet, const GpOrderResult& r) {
  json out;
  out["order"] = r.exact ? json(r.value) : json(nullptr);
  out["lower_bound"] = r.value;
  out["witness"] = r.exact ? word_to_json(alphabet, r.witness) : json(nullptr);
  return out;
}

json axiom_report_to_json(const Alphabet& alphabet, const AxiomReport& r) {
  json out = {{"relation", r.relation},
              {"alphabet", alphabet_to_json(alphabet)},
              {"trials", r.trials},
              {"seed", r.seed},
              {"violations", r.violations},
              {"passed", r.passed()},
              {"exercised", {{"ii_a", r.weakening_xy_exercised},
                             {"ii_b", r.weakening_drop_exercised},
                             {"iii", r.composition_exercised}}}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out["counterexample"] = {{"axiom", c.axiom},
                             {"detail", c.detail},
                             {"x", word_to_json(alphabet, c.triple.x)},
                             {"y", word_to_json(alphabet, c.triple.y)},
                             {"z", word_to_json(alphabet, c.triple.z)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json complex_to_json(const ChainComplexRep& complex) {
  const Alphabet& a = complex.alphabet();
  json degrees = json::array();
  for (int k = 0; k <= complex.top_degree(); ++k) {
    json basis = json::array();
    for (const auto& w : complex.basis(k)) basis.push_back(word_to_json(a, w));
    const auto& d = complex.boundary_matrix(k);
    json entries = json::array();
    for (const auto& e : d.entries()) entries.push_back({e.row, e.col, integer_to_json(e.value)});
    degrees.push_back({{"degree", k},
                       {"basis", basis},
                       {"boundary", {{"rows", d.rows()}, {"cols", d.cols()}, {"entries", entries}}}});
  }
  return {{"label", complex.label()},
          {"alphabet", alphabet_to_json(a)},
          {"complete", complex.complete()},
          {"top_degree", complex.top_degree()},
          {"degrees", degrees}};
}

json error_to_json(const Error& e) {
  return {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"context", e.context()}};
}

}  // namespace wordhom
