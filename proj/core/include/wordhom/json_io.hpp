#pragma once

#include "wordhom/alphabet.hpp"
#include "wordhom/chain.hpp"
#include "wordhom/complex.hpp"
#include "wordhom/error.hpp"
#include "wordhom/filler.hpp"
#include "wordhom/genpos.hpp"
#include "wordhom/homology.hpp"

#include <nlohmann/json.hpp>

#include <optional>

namespace wordhom {

using json = nlohmann::json;

json alphabet_to_json(const Alphabet& alphabet);
Alphabet alphabet_from_json(const json& j);

json symbol_to_json(const Alphabet& alphabet, Symbol s);
Symbol symbol_from_json(const Alphabet& alphabet, const json& j);
json word_to_json(const Alphabet& alphabet, const Word& w);
Word word_from_json(const Alphabet& alphabet, const json& j);

/// Coefficients are JSON integers; values beyond 64 bits are written as decimal strings.
json integer_to_json(const Integer& value);
Integer integer_from_json(const json& j);

/// {"alphabet": {...}, "degree": n, "terms": [{"coeff": k, "word": [...]}, ...]}
json chain_to_json(const Alphabet& alphabet, const Chain& c);

struct ChainDocument {
  Alphabet alphabet;
  Chain chain;
  std::optional<Word> base;  ///< optional "base" word for general-position fills
};

ChainDocument chain_from_json(const json& j);

/// {"input": chain, "filling": chain, "steps": [...], "valid": bool}
json certificate_to_json(const Alphabet& alphabet, const FillCertificate& cert);

struct CertificateDocument {
  Alphabet alphabet;
  Chain input;
  Chain filling;
};

CertificateDocument certificate_from_json(const json& j);

json homology_to_json(const HomologyGroup& h);
json gp_order_to_json(const Alphabet& alphabet, const GpOrderResult& r);
json axiom_report_to_json(const Alphabet& alphabet, const AxiomReport& r);

/// Per-degree bases and boundary matrices as (row, col, value) triples.
json complex_to_json(const ChainComplexRep& complex);

json error_to_json(const Error& e);

}  // namespace wordhom
