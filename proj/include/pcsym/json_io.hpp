// JSON serialization and pretty text for the algebra types.
//
// All structured CLI output flows through these helpers so that it is
// deterministic and byte-stable: terms are listed in the canonical
// partition order, rationals as exact num/den pairs (machine integers
// when they fit, decimal strings otherwise), and JSON object keys sort
// alphabetically.  symfunc_from_json inverts symfunc_to_json, so every
// printed function round-trips through the expand command unchanged.

#pragma once

#include <string>

#include "json.hpp"
#include "pcsym/bivar.hpp"
#include "pcsym/symfunc.hpp"

namespace pcsym {

// {"basis": "<name>", "terms": [{"partition": [..], "num": .., "den": ..}]}
nlohmann::json symfunc_to_json(const SymFunc& g, Basis b);

// Inverse of symfunc_to_json; throws std::invalid_argument on malformed
// input.  The basis named in the document is reported via basis_out.
SymFunc symfunc_from_json(const nlohmann::json& j, Basis* basis_out = nullptr);

// {"terms": [{"x_partition": [..], "y_partition": [..], "num": .., "den": ..}]}
// in power-sum coordinates for both alphabets.
nlohmann::json symfunc2_to_json(const SymFunc2& g);

// {"vars": ["i","j"], "terms": [{"exponents": [e1,e2], "num": .., "den": ..}]}
nlohmann::json bivar_to_json(const BivarPoly& f);

// {"variable": "t", "terms": [{"power": k, "function": {..symfunc..}}]}
nlohmann::json tpoly_to_json(const TPoly& f, Basis b);

// Human-readable forms used behind --pretty.
std::string pretty_symfunc(const SymFunc& g, Basis b);
std::string pretty_symfunc2(const SymFunc2& g);
std::string pretty_tpoly(const TPoly& f, Basis b);

}  // namespace pcsym
