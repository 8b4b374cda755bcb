#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "climakg/date.hpp"

namespace climakg::rdf {

namespace xsd {
inline constexpr std::string_view kNamespace = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kDate = "http://www.w3.org/2001/XMLSchema#date";
}  // namespace xsd

inline constexpr std::string_view kRdfNamespace =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

// An absolute IRI. Equality is codepoint equality of the string form; no
// normalization is attempted.
class Iri {
 public:
  // Throws InvalidTerm when the value is empty, holds whitespace or lacks a
  // scheme separator.
  explicit Iri(std::string value);

  const std::string& str() const { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

enum class LiteralType { kString, kDouble, kInteger, kBoolean, kDate };

std::string_view DatatypeIri(LiteralType type);

// A literal of one of the five supported XSD datatypes. The lexical form is
// kept verbatim; the typed value is decoded once at construction.
class Literal {
 public:
  // Validating factory. Throws UnsupportedDatatype for datatypes outside the
  // supported set and InvalidLexicalForm for lexicals that violate the
  // datatype grammar.
  static Literal Make(std::string lexical, const Iri& datatype);
  static Literal Make(std::string lexical, LiteralType type);

  static Literal String(std::string lexical, std::string language = {});
  static Literal Integer(long long value);
  static Literal Double(double value);
  static Literal Boolean(bool value);
  static Literal DateValue(const Date& value);

  const std::string& lexical() const { return lexical_; }
  LiteralType type() const { return type_; }
  Iri datatype() const { return Iri(std::string(DatatypeIri(type_))); }
  // Lower-cased language tag; empty when the literal carries none.
  const std::string& language() const { return language_; }

  bool is_numeric() const {
    return type_ == LiteralType::kInteger || type_ == LiteralType::kDouble;
  }
  // Numeric value for xsd:integer / xsd:double literals.
  std::optional<double> numeric_value() const;
  // Exact value for xsd:integer literals within the 64-bit range.
  std::optional<long long> integer_value() const;
  std::optional<bool> boolean_value() const;
  std::optional<Date> date_value() const;

  // Term equality: lexical form, datatype and language must all match.
  friend bool operator==(const Literal& a, const Literal& b) {
    return a.type_ == b.type_ && a.lexical_ == b.lexical_ &&
           a.language_ == b.language_;
  }

 private:
  using Value = std::variant<std::monostate, long long, double, bool, Date>;

  Literal(std::string lexical, LiteralType type, std::string language, Value value)
      : lexical_(std::move(lexical)),
        type_(type),
        language_(std::move(language)),
        value_(value) {}

  std::string lexical_;
  LiteralType type_;
  std::string language_;
  Value value_;
};

class BlankNode {
 public:
  // Label without the "_:" marker. Throws InvalidTerm when empty.
  explicit BlankNode(std::string label);

  const std::string& label() const { return label_; }

  friend bool operator==(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

enum class TermKind { kIri, kLiteral, kBlankNode };

class Term {
 public:
  Term(Iri iri) : value_(std::move(iri)) {}
  Term(Literal literal) : value_(std::move(literal)) {}
  Term(BlankNode node) : value_(std::move(node)) {}

  TermKind kind() const { return static_cast<TermKind>(value_.index()); }
  bool is_iri() const { return kind() == TermKind::kIri; }
  bool is_literal() const { return kind() == TermKind::kLiteral; }
  bool is_blank() const { return kind() == TermKind::kBlankNode; }

  const Iri& iri() const { return std::get<Iri>(value_); }
  const Literal& literal() const { return std::get<Literal>(value_); }
  const BlankNode& blank() const { return std::get<BlankNode>(value_); }

  // N-Triples surface form: <iri>, "lex"^^<dt>, "lex"@lang, "lex", _:label.
  std::string ToNTriples() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::variant<Iri, Literal, BlankNode> value_;
};

struct TermHash {
  std::size_t operator()(const Term& term) const;
};

struct Triple {
  // Throws InvalidTerm when the subject is a literal or the predicate is not an
  // IRI.
  Triple(Term subject, Term predicate, Term object);

  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

enum class Ordering { kLess, kEqual, kGreater, kIncomparable };

// Typed-value comparison used by FILTER and ORDER BY. Numbers compare across
// xsd:integer and xsd:double, dates chronologically, plain strings by
// codepoint, booleans false < true. IRIs, blank nodes and language-tagged
// strings only ever compare equal (same term) or incomparable.
Ordering CompareTerms(const Term& a, const Term& b);

// Escapes a string for use inside a double-quoted N-Triples / Turtle literal.
std::string EscapeString(std::string_view text);

}  // namespace climakg::rdf
