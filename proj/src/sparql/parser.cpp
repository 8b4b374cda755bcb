#include "climakg/sparql/parser.hpp"

#include <algorithm>
#include <charconv>

#include "climakg/errors.hpp"
#include "climakg/text/lexer.hpp"
#include "climakg/text/terms.hpp"

namespace climakg::sparql {

namespace {

using text::Token;
using text::TokenKind;

bool IsNumber(const Token& t) {
  return t.kind == TokenKind::kInteger || t.kind == TokenKind::kDecimal ||
         t.kind == TokenKind::kDouble;
}

std::optional<ExprOp> FunctionOp(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (name == "YEAR") return ExprOp::kYear;
  if (name == "MONTH") return ExprOp::kMonth;
  if (name == "DAY") return ExprOp::kDay;
  if (name == "STR") return ExprOp::kStr;
  if (name == "BOUND") return ExprOp::kBound;
  return std::nullopt;
}

class QueryParser {
 public:
  explicit QueryParser(std::string_view input) : tokens_(text::Tokenize(input)) {}

  Query Parse() {
    Query q;
    ParsePrologue();
    const Token select_token = tokens_.Peek();
    tokens_.ExpectKeyword("SELECT");
    q.distinct = tokens_.TryKeyword("DISTINCT");
    if (tokens_.TryPunct("*")) {
      q.select_all = true;
    } else {
      while (tokens_.Peek().kind == TokenKind::kVariable) {
        const std::string& name = tokens_.Next().text;
        if (std::find(q.select.begin(), q.select.end(), name) == q.select.end()) {
          q.select.push_back(name);
        }
      }
      if (q.select.empty()) {
        tokens_.Fail("expected variable or '*' after SELECT but found " +
                     text::Describe(tokens_.Peek()));
      }
    }
    tokens_.TryKeyword("WHERE");
    q.where = ParseGroup();
    ParseSolutionModifiers(q);
    if (!tokens_.AtEnd()) {
      tokens_.Fail("unexpected " + text::Describe(tokens_.Peek()) + " after query");
    }

    const auto pattern_vars = q.where.Variables();
    for (const std::string& v : q.select) {
      if (std::find(pattern_vars.begin(), pattern_vars.end(), v) == pattern_vars.end()) {
        throw SyntaxError("selected variable ?" + v + " does not occur in the pattern",
                          select_token.line, select_token.column);
      }
    }
    q.prefixes = prefixes_.entries();
    return q;
  }

 private:
  void ParsePrologue() {
    while (true) {
      if (tokens_.TryKeyword("PREFIX")) {
        const Token& name = tokens_.Next();
        if (name.kind != TokenKind::kPrefixedName || name.text.back() != ':' ||
            name.text.find(':') != name.text.size() - 1) {
          tokens_.FailAt(name, "expected prefix name ending in ':' but found " +
                                   text::Describe(name));
        }
        const Token& iri = tokens_.Next();
        if (iri.kind != TokenKind::kIriRef) {
          tokens_.FailAt(iri, "expected namespace IRI but found " + text::Describe(iri));
        }
        prefixes_.Declare(name.text.substr(0, name.text.size() - 1), iri.text);
      } else if (tokens_.PeekKeyword("BASE")) {
        tokens_.Fail("BASE is not supported");
      } else {
        return;
      }
    }
  }

  GroupPattern ParseGroup() {
    GroupPattern group;
    tokens_.ExpectPunct("{");
    while (!tokens_.TryPunct("}")) {
      if (tokens_.AtEnd()) tokens_.Fail("expected '}' but found end of input");
      if (tokens_.TryKeyword("FILTER")) {
        group.filters.push_back(ParseConstraint());
      } else if (tokens_.TryKeyword("OPTIONAL")) {
        group.optionals.push_back(ParseGroup());
      } else if (tokens_.TryPunct(".")) {
        // separator between blocks
      } else if (tokens_.Peek().Is(TokenKind::kPunct, "{")) {
        tokens_.Fail("nested groups are not supported");
      } else {
        ParseTriplesSameSubject(group.triples);
        // Triples are separated by '.'; anything else must close the block.
        const Token& t = tokens_.Peek();
        if (!t.Is(TokenKind::kPunct, ".") && !t.Is(TokenKind::kPunct, "}") &&
            !tokens_.PeekKeyword("FILTER") && !tokens_.PeekKeyword("OPTIONAL")) {
          tokens_.Fail("expected '.', ';', ',' or '}' but found " + text::Describe(t));
        }
      }
    }
    return group;
  }

  void ParseTriplesSameSubject(std::vector<QueryPattern>& out) {
    PatternSlot subject = ParseVarOrTerm(/*position=*/"subject");
    while (true) {
      PatternSlot predicate = ParseVerb();
      while (true) {
        out.push_back(QueryPattern{subject, predicate, ParseVarOrTerm("object")});
        if (!tokens_.TryPunct(",")) break;
      }
      if (!tokens_.TryPunct(";")) return;
      while (tokens_.TryPunct(";")) {
      }
      const Token& t = tokens_.Peek();
      if (t.Is(TokenKind::kPunct, ".") || t.Is(TokenKind::kPunct, "}")) return;
    }
  }

  rdf::Iri ReadIri(const Token& t) {
    if (t.kind == TokenKind::kIriRef) return text::IriFromToken(t);
    if (t.kind == TokenKind::kPrefixedName) return prefixes_.Expand(t);
    tokens_.FailAt(t, "expected IRI but found " + text::Describe(t));
  }

  PatternSlot ParseVerb() {
    const Token& t = tokens_.Peek();
    if (t.Is(TokenKind::kName, "a")) {
      tokens_.Next();
      return rdf::Term(rdf::Iri(std::string(rdf::kRdfType)));
    }
    if (t.kind == TokenKind::kVariable) return Variable{tokens_.Next().text};
    if (t.kind == TokenKind::kIriRef) return rdf::Term(text::IriFromToken(tokens_.Next()));
    if (t.kind == TokenKind::kPrefixedName) return rdf::Term(prefixes_.Expand(tokens_.Next()));
    tokens_.Fail("expected predicate but found " + text::Describe(t));
  }

  PatternSlot ParseVarOrTerm(const char* position) {
    const Token& t = tokens_.Peek();
    if (t.kind == TokenKind::kVariable) return Variable{tokens_.Next().text};
    if (auto term = TryParseTerm()) return *term;
    tokens_.Fail(std::string("expected ") + position + " but found " + text::Describe(t));
  }

  // IRI, prefixed name, blank node label, literal or boolean/number shorthand.
  std::optional<rdf::Term> TryParseTerm() {
    const Token& t = tokens_.Peek();
    switch (t.kind) {
      case TokenKind::kIriRef:
        return rdf::Term(text::IriFromToken(tokens_.Next()));
      case TokenKind::kPrefixedName:
        if (tokens_.Peek(1).Is(TokenKind::kPunct, "(")) return std::nullopt;
        return rdf::Term(prefixes_.Expand(tokens_.Next()));
      case TokenKind::kBlankNode:
        return rdf::Term(rdf::BlankNode(tokens_.Next().text));
      case TokenKind::kString: {
        const Token& s = tokens_.Next();
        if (tokens_.Peek().kind == TokenKind::kLangTag) {
          return rdf::Term(rdf::Literal::String(s.text, tokens_.Next().text));
        }
        if (tokens_.TryOperator("^^")) {
          const Token& dt = tokens_.Next();
          return rdf::Term(text::TypedLiteral(dt, s.text, ReadIri(dt)));
        }
        return rdf::Term(rdf::Literal::String(s.text));
      }
      case TokenKind::kInteger:
      case TokenKind::kDecimal:
      case TokenKind::kDouble:
        return rdf::Term(text::NumericLiteral(tokens_.Next(), false));
      case TokenKind::kOperator:
        if ((t.text == "-" || t.text == "+") && IsNumber(tokens_.Peek(1)) &&
            tokens_.Peek(1).offset == t.offset + 1) {
          const bool negative = tokens_.Next().text == "-";
          return rdf::Term(text::NumericLiteral(tokens_.Next(), negative));
        }
        return std::nullopt;
      case TokenKind::kName:
        if (t.text == "true" || t.text == "false") {
          return rdf::Term(rdf::Literal::Boolean(tokens_.Next().text == "true"));
        }
        return std::nullopt;
      default:
        return std::nullopt;
    }
  }

  Expr ParseConstraint() {
    if (tokens_.Peek().Is(TokenKind::kPunct, "(")) return ParseBracketted();
    if (auto call = TryParseFunctionCall()) return *call;
    tokens_.Fail("expected '(' after FILTER but found " + text::Describe(tokens_.Peek()));
  }

  Expr ParseBracketted() {
    tokens_.ExpectPunct("(");
    Expr e = ParseOr();
    tokens_.ExpectPunct(")");
    return e;
  }

  Expr ParseOr() {
    Expr left = ParseAnd();
    while (tokens_.TryOperator("||")) {
      left = Expr::Call(ExprOp::kOr, {std::move(left), ParseAnd()});
    }
    return left;
  }

  Expr ParseAnd() {
    Expr left = ParseRelational();
    while (tokens_.TryOperator("&&")) {
      left = Expr::Call(ExprOp::kAnd, {std::move(left), ParseRelational()});
    }
    return left;
  }

  Expr ParseRelational() {
    Expr left = ParseUnary();
    static const std::pair<const char*, ExprOp> kOps[] = {
        {"=", ExprOp::kEq},  {"!=", ExprOp::kNe}, {"<", ExprOp::kLt},
        {"<=", ExprOp::kLe}, {">", ExprOp::kGt},  {">=", ExprOp::kGe},
    };
    for (const auto& [symbol, op] : kOps) {
      if (tokens_.TryOperator(symbol)) {
        return Expr::Call(op, {std::move(left), ParseUnary()});
      }
    }
    return left;
  }

  Expr ParseUnary() {
    if (tokens_.TryOperator("!")) return Expr::Call(ExprOp::kNot, {ParseUnary()});
    return ParsePrimary();
  }

  std::optional<Expr> TryParseFunctionCall() {
    const Token& t = tokens_.Peek();
    if ((t.kind != TokenKind::kName && t.kind != TokenKind::kPrefixedName) ||
        !tokens_.Peek(1).Is(TokenKind::kPunct, "(")) {
      return std::nullopt;
    }
    const auto op = t.kind == TokenKind::kName ? FunctionOp(t.text) : std::nullopt;
    if (!op) throw UnknownFunction("unknown function " + t.text, t.line, t.column);
    tokens_.Next();
    tokens_.ExpectPunct("(");
    Expr call;
    if (*op == ExprOp::kBound) {
      const Token& v = tokens_.Next();
      if (v.kind != TokenKind::kVariable) {
        tokens_.FailAt(v, "BOUND expects a variable but found " + text::Describe(v));
      }
      call = Expr::Call(ExprOp::kBound, {});
      call.variable = v.text;
    } else {
      call = Expr::Call(*op, {ParseOr()});
    }
    if (tokens_.Peek().Is(TokenKind::kPunct, ",")) {
      tokens_.Fail(t.text + " takes exactly one argument");
    }
    tokens_.ExpectPunct(")");
    return call;
  }

  Expr ParsePrimary() {
    const Token& t = tokens_.Peek();
    if (t.Is(TokenKind::kPunct, "(")) return ParseBracketted();
    if (t.kind == TokenKind::kVariable) return Expr::Var(tokens_.Next().text);
    if (auto call = TryParseFunctionCall()) return *call;
    if (auto term = TryParseTerm()) return Expr::Constant(*term);
    tokens_.Fail("expected expression but found " + text::Describe(t));
  }

  void ParseSolutionModifiers(Query& q) {
    if (tokens_.TryKeyword("ORDER")) {
      tokens_.ExpectKeyword("BY");
      while (true) {
        const Token& t = tokens_.Peek();
        if (tokens_.PeekKeyword("ASC") || tokens_.PeekKeyword("DESC")) {
          const bool ascending = tokens_.PeekKeyword("ASC");
          tokens_.Next();
          q.order_by.push_back(OrderKey{ParseBracketted(), ascending});
        } else if (t.kind == TokenKind::kVariable) {
          q.order_by.push_back(OrderKey{Expr::Var(tokens_.Next().text), true});
        } else if (t.Is(TokenKind::kPunct, "(")) {
          q.order_by.push_back(OrderKey{ParseBracketted(), true});
        } else if (auto call = TryParseFunctionCall()) {
          q.order_by.push_back(OrderKey{*call, true});
        } else {
          break;
        }
      }
      if (q.order_by.empty()) {
        tokens_.Fail("expected ordering condition but found " +
                     text::Describe(tokens_.Peek()));
      }
    }
    // LIMIT and OFFSET may come in either order, each at most once.
    for (int i = 0; i < 2; ++i) {
      if (!q.limit && tokens_.TryKeyword("LIMIT")) {
        q.limit = ParseCount("LIMIT");
      } else if (!q.offset && tokens_.TryKeyword("OFFSET")) {
        q.offset = ParseCount("OFFSET");
      }
    }
  }

  std::size_t ParseCount(const char* clause) {
    const Token& t = tokens_.Next();
    std::size_t value = 0;
    if (t.kind != TokenKind::kInteger) {
      tokens_.FailAt(t, std::string(clause) + " expects a non-negative integer but found " +
                            text::Describe(t));
    }
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc()) tokens_.FailAt(t, std::string(clause) + " value out of range");
    return value;
  }

  text::TokenStream tokens_;
  text::PrefixMap prefixes_;
};

}  // namespace

Query ParseQuery(std::string_view text) { return QueryParser(text).Parse(); }

}  // namespace climakg::sparql
