#ifndef STARLAB_SYMBOL_JSON_HPP
#define STARLAB_SYMBOL_JSON_HPP

#include <string>

#include <json.hpp>

#include "starlab/symbol.hpp"

namespace starlab {

// Canonical form: {"modes":N,"terms":[{"m":[..],"n":[..],"re":..,"im":..}]}
// with terms in graded-lexicographic order and no zero coefficients.
nlohmann::ordered_json symbol_to_json(const PhaseSymbol& s);

// Accepts any term order, merges duplicates, drops zeros.  Throws
// ModeMismatch / ParseError on malformed input.
PhaseSymbol symbol_from_json(const nlohmann::json& j);

// Parse from text; ParseError carries the byte position reported by the
// JSON parser.
PhaseSymbol parse_symbol(const std::string& text);

}  // namespace starlab

#endif
