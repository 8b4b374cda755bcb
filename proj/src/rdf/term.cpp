#include "climakg/rdf/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "climakg/errors.hpp"

namespace climakg::rdf {

namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool ValidIntegerLexical(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), IsDigit);
}

// xsd:double lexical space: decimal or scientific notation, INF, -INF, NaN.
std::optional<double> ParseDoubleLexical(std::string_view s) {
  if (s == "INF" || s == "+INF") return std::numeric_limits<double>::infinity();
  if (s == "-INF") return -std::numeric_limits<double>::infinity();
  if (s == "NaN") return std::numeric_limits<double>::quiet_NaN();
  std::string_view body = s;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) body.remove_prefix(1);
  if (body.empty()) return std::nullopt;
  // mantissa: digits [ '.' digits ] | '.' digits, then optional exponent
  std::size_t i = 0;
  std::size_t mantissa_digits = 0;
  while (i < body.size() && IsDigit(body[i])) ++i, ++mantissa_digits;
  if (i < body.size() && body[i] == '.') {
    ++i;
    while (i < body.size() && IsDigit(body[i])) ++i, ++mantissa_digits;
  }
  if (mantissa_digits == 0) return std::nullopt;
  if (i < body.size() && (body[i] == 'e' || body[i] == 'E')) {
    ++i;
    if (i < body.size() && (body[i] == '+' || body[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < body.size() && IsDigit(body[i])) ++i, ++exp_digits;
    if (exp_digits == 0) return std::nullopt;
  }
  if (i != body.size()) return std::nullopt;

  // from_chars rejects a leading '+', so parse the unsigned body and reapply.
  double value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ptr != body.data() + body.size()) return std::nullopt;
  if (ec == std::errc::result_out_of_range) {
    // strtod saturates to HUGE_VAL or flushes toward zero.
    value = std::strtod(std::string(body).c_str(), nullptr);
  } else if (ec != std::errc()) {
    return std::nullopt;
  }
  return s[0] == '-' ? -value : value;
}

std::string ShortestDouble(double value) {
  if (std::isnan(value)) return "NaN";
  if (std::isinf(value)) return value > 0 ? "INF" : "-INF";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

LiteralType TypeFromIri(std::string_view iri) {
  if (iri == xsd::kString) return LiteralType::kString;
  if (iri == xsd::kDouble) return LiteralType::kDouble;
  if (iri == xsd::kInteger) return LiteralType::kInteger;
  if (iri == xsd::kBoolean) return LiteralType::kBoolean;
  if (iri == xsd::kDate) return LiteralType::kDate;
  throw UnsupportedDatatype("unsupported datatype <" + std::string(iri) + ">");
}

template <typename T>
Ordering CompareValues(const T& a, const T& b) {
  if (a < b) return Ordering::kLess;
  if (b < a) return Ordering::kGreater;
  return Ordering::kEqual;
}

Ordering CompareLiterals(const Literal& a, const Literal& b) {
  if (a.is_numeric() && b.is_numeric()) {
    const auto ia = a.integer_value();
    const auto ib = b.integer_value();
    if (ia && ib) return CompareValues(*ia, *ib);
    const double da = *a.numeric_value();
    const double db = *b.numeric_value();
    if (std::isnan(da) || std::isnan(db)) return Ordering::kIncomparable;
    return CompareValues(da, db);
  }
  if (a.type() != b.type()) return Ordering::kIncomparable;
  switch (a.type()) {
    case LiteralType::kDate:
      return CompareValues(*a.date_value(), *b.date_value());
    case LiteralType::kBoolean:
      return CompareValues(*a.boolean_value(), *b.boolean_value());
    case LiteralType::kString:
      if (a.language().empty() && b.language().empty()) {
        // std::string compares bytes; for UTF-8 byte order equals codepoint
        // order.
        return CompareValues(a.lexical(), b.lexical());
      }
      return a == b ? Ordering::kEqual : Ordering::kIncomparable;
    default:
      return Ordering::kIncomparable;
  }
}

}  // namespace

std::string_view DatatypeIri(LiteralType type) {
  switch (type) {
    case LiteralType::kString:
      return xsd::kString;
    case LiteralType::kDouble:
      return xsd::kDouble;
    case LiteralType::kInteger:
      return xsd::kInteger;
    case LiteralType::kBoolean:
      return xsd::kBoolean;
    case LiteralType::kDate:
      return xsd::kDate;
  }
  return xsd::kString;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw InvalidTerm("empty IRI");
  if (std::any_of(value_.begin(), value_.end(), IsAsciiSpace)) {
    throw InvalidTerm("IRI contains whitespace: " + value_);
  }
  if (value_.find(':') == std::string::npos) {
    throw InvalidTerm("IRI has no scheme: " + value_);
  }
}

Literal Literal::Make(std::string lexical, const Iri& datatype) {
  return Make(std::move(lexical), TypeFromIri(datatype.str()));
}

Literal Literal::Make(std::string lexical, LiteralType type) {
  auto invalid = [&]() {
    return InvalidLexicalForm("invalid lexical form \"" + lexical + "\" for " +
                              std::string(DatatypeIri(type)));
  };
  Value value;
  switch (type) {
    case LiteralType::kString:
      break;
    case LiteralType::kInteger: {
      if (!ValidIntegerLexical(lexical)) throw invalid();
      std::string_view digits = lexical;
      if (digits[0] == '+') digits.remove_prefix(1);
      long long parsed = 0;
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), parsed);
      if (ec == std::errc() && ptr == digits.data() + digits.size()) {
        value = parsed;
      } else {
        value = *ParseDoubleLexical(lexical);
      }
      break;
    }
    case LiteralType::kDouble: {
      auto parsed = ParseDoubleLexical(lexical);
      if (!parsed) throw invalid();
      value = *parsed;
      break;
    }
    case LiteralType::kBoolean:
      if (lexical == "true" || lexical == "1") {
        value = true;
      } else if (lexical == "false" || lexical == "0") {
        value = false;
      } else {
        throw invalid();
      }
      break;
    case LiteralType::kDate: {
      auto parsed = ParseIsoDate(lexical);
      if (!parsed) throw invalid();
      value = *parsed;
      break;
    }
  }
  return Literal(std::move(lexical), type, {}, value);
}

Literal Literal::String(std::string lexical, std::string language) {
  std::transform(language.begin(), language.end(), language.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return Literal(std::move(lexical), LiteralType::kString, std::move(language), {});
}

Literal Literal::Integer(long long value) {
  return Literal(std::to_string(value), LiteralType::kInteger, {}, value);
}

Literal Literal::Double(double value) {
  return Literal(ShortestDouble(value), LiteralType::kDouble, {}, value);
}

Literal Literal::Boolean(bool value) {
  return Literal(value ? "true" : "false", LiteralType::kBoolean, {}, value);
}

Literal Literal::DateValue(const Date& value) {
  if (!value.ok()) throw InvalidLexicalForm("invalid calendar date");
  return Literal(FormatIsoDate(value), LiteralType::kDate, {}, value);
}

std::optional<double> Literal::numeric_value() const {
  if (const auto* i = std::get_if<long long>(&value_)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&value_)) return *d;
  return std::nullopt;
}

std::optional<long long> Literal::integer_value() const {
  if (const auto* i = std::get_if<long long>(&value_)) return *i;
  return std::nullopt;
}

std::optional<bool> Literal::boolean_value() const {
  if (const auto* b = std::get_if<bool>(&value_)) return *b;
  return std::nullopt;
}

std::optional<Date> Literal::date_value() const {
  if (const auto* d = std::get_if<Date>(&value_)) return *d;
  return std::nullopt;
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (label_.empty()) throw InvalidTerm("empty blank node label");
  if (label_.rfind("_:", 0) == 0) label_.erase(0, 2);
  if (label_.empty()) throw InvalidTerm("empty blank node label");
}

std::string EscapeString(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '"':
        out += "\\\"";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string Term::ToNTriples() const {
  switch (kind()) {
    case TermKind::kIri:
      return "<" + iri().str() + ">";
    case TermKind::kBlankNode:
      return "_:" + blank().label();
    case TermKind::kLiteral: {
      const Literal& lit = literal();
      std::string out = "\"" + EscapeString(lit.lexical()) + "\"";
      if (!lit.language().empty()) {
        out += "@" + lit.language();
      } else if (lit.type() != LiteralType::kString) {
        out += "^^<" + std::string(DatatypeIri(lit.type())) + ">";
      }
      return out;
    }
  }
  return {};
}

std::size_t TermHash::operator()(const Term& term) const {
  std::size_t seed = static_cast<std::size_t>(term.kind()) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&seed](std::size_t h) {
    seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  };
  std::hash<std::string> hs;
  switch (term.kind()) {
    case TermKind::kIri:
      mix(hs(term.iri().str()));
      break;
    case TermKind::kBlankNode:
      mix(hs(term.blank().label()));
      break;
    case TermKind::kLiteral:
      mix(hs(term.literal().lexical()));
      mix(static_cast<std::size_t>(term.literal().type()));
      mix(hs(term.literal().language()));
      break;
  }
  return seed;
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) throw InvalidTerm("literal in subject position");
  if (!predicate.is_iri()) throw InvalidTerm("predicate must be an IRI");
}

Ordering CompareTerms(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return Ordering::kIncomparable;
  switch (a.kind()) {
    case TermKind::kLiteral:
      return CompareLiterals(a.literal(), b.literal());
    case TermKind::kIri:
    case TermKind::kBlankNode:
      return a == b ? Ordering::kEqual : Ordering::kIncomparable;
  }
  return Ordering::kIncomparable;
}

}  // namespace climakg::rdf
