#pragma once

#include <map>
#include <optional>
#include <string>

#include "climakg/rdf/term.hpp"
#include "climakg/text/lexer.hpp"

namespace climakg::text {

// Prefix declarations shared by the Turtle and SPARQL readers.
class PrefixMap {
 public:
  void Declare(const std::string& prefix, const std::string& iri) { map_[prefix] = iri; }
  bool Has(const std::string& prefix) const { return map_.count(prefix) > 0; }
  const std::map<std::string, std::string>& entries() const { return map_; }

  // Expands a kPrefixedName token. Throws UnknownPrefix at the token position.
  rdf::Iri Expand(const Token& token) const;

 private:
  std::map<std::string, std::string> map_;
};

// The following convert model-level validation failures into SyntaxError at
// the token position so callers see a line/column.
rdf::Iri IriFromToken(const Token& token);
rdf::Literal TypedLiteral(const Token& at, std::string lexical, const rdf::Iri& datatype);
// Turtle / SPARQL numeric shorthand. Integers become xsd:integer, decimals and
// doubles become xsd:double.
rdf::Literal NumericLiteral(const Token& number, bool negative);

}  // namespace climakg::text
