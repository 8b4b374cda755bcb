#pragma once

#include <string_view>

#include "climakg/sparql/ast.hpp"

namespace climakg::sparql {

// Parses the supported SELECT subset:
//
//   PREFIX p: <iri> ...
//   SELECT [DISTINCT] (?v ... | *) [WHERE] {
//     triple patterns with ';' and ',' abbreviations, 'a'
//     FILTER(expr)          comparisons, && || !, YEAR MONTH DAY STR BOUND
//     OPTIONAL { ... }
//   }
//   [ORDER BY (?v | ASC(expr) | DESC(expr) | fn(expr) | (expr))+]
//   [LIMIT n] [OFFSET n]
//
// Prefixed names are expanded while parsing. '$v' is normalised to '?v'.
// Throws SyntaxError, UnknownPrefix or UnknownFunction with a position.
Query ParseQuery(std::string_view text);

}  // namespace climakg::sparql
