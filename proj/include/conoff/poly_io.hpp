#pragma once

#include "conoff/poly.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace conoff {

/// {"vars":[...],"terms":[{"exp":[...],"num":"..","den":".."}]} with terms in
/// descending order under ord.
nlohmann::json to_json(const MultiPoly& p, const MonomialOrder& ord = MonomialOrder::grevlex());
MultiPoly poly_from_json(const nlohmann::json& j);

/// Human-readable text such as "331776 x^6-42192 x^2+48400 y^2", terms descending
/// under ord.
std::string to_pretty(const MultiPoly& p, const MonomialOrder& ord = MonomialOrder::grevlex());

/// Parses an expression over the given ring. Accepts + - * / ^ (and **),
/// parentheses, integer literals and juxtaposition as multiplication.
/// Division is only allowed by nonzero constants.
MultiPoly parse_poly(const std::string& text, const Ring& ring);

}  // namespace conoff
