#pragma once

#include <string>
#include <string_view>

#include "climakg/sparql/evaluator.hpp"

namespace climakg::sparql {

inline constexpr std::string_view kResultsJsonMediaType = "application/sparql-results+json";

// SPARQL 1.1 Query Results JSON:
//   {"head":{"vars":[...]},"results":{"bindings":[{"v":{"type":...,"value":...}}]}}
// Unbound variables are omitted from their row object. Literals carry
// "datatype" unless they are plain xsd:string, and "xml:lang" when tagged.
std::string SerializeResultsJson(const SolutionSequence& solutions);

// Inverse of SerializeResultsJson, used by endpoint clients. Throws
// JsonSyntaxError on malformed documents.
SolutionSequence ParseResultsJson(std::string_view document);

// RFC 4180 CSV with the variable names as header. IRIs and literals are
// written as their value / lexical form, blank nodes as _:label, unbound
// variables as empty cells.
std::string SerializeResultsCsv(const SolutionSequence& solutions);

}  // namespace climakg::sparql
