#include "climakg/text/terms.hpp"

#include "climakg/errors.hpp"

namespace climakg::text {

rdf::Iri PrefixMap::Expand(const Token& token) const {
  const auto colon = token.text.find(':');
  const std::string prefix = token.text.substr(0, colon);
  auto it = map_.find(prefix);
  if (it == map_.end()) {
    throw UnknownPrefix("undeclared prefix '" + prefix + ":'", token.line, token.column);
  }
  try {
    return rdf::Iri(it->second + token.text.substr(colon + 1));
  } catch (const InvalidTerm& e) {
    throw SyntaxError(e.what(), token.line, token.column);
  }
}

rdf::Iri IriFromToken(const Token& token) {
  try {
    return rdf::Iri(token.text);
  } catch (const InvalidTerm& e) {
    throw SyntaxError(e.what(), token.line, token.column);
  }
}

rdf::Literal TypedLiteral(const Token& at, std::string lexical, const rdf::Iri& datatype) {
  try {
    return rdf::Literal::Make(std::move(lexical), datatype);
  } catch (const Error& e) {
    throw SyntaxError(e.what(), at.line, at.column);
  }
}

rdf::Literal NumericLiteral(const Token& number, bool negative) {
  const std::string lexical = (negative ? "-" : "") + number.text;
  const auto type = number.kind == TokenKind::kInteger ? rdf::LiteralType::kInteger
                                                       : rdf::LiteralType::kDouble;
  try {
    return rdf::Literal::Make(lexical, type);
  } catch (const Error& e) {
    throw SyntaxError(e.what(), number.line, number.column);
  }
}

}  // namespace climakg::text
