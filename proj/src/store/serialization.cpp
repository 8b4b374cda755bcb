#include "climakg/store/serialization.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "climakg/errors.hpp"
#include "climakg/text/lexer.hpp"
#include "climakg/text/terms.hpp"

namespace climakg::store {

namespace {

using text::Token;
using text::TokenKind;
using text::TokenStream;

std::size_t InsertAll(Graph& graph, const std::vector<rdf::Triple>& triples) {
  std::size_t inserted = 0;
  for (const rdf::Triple& t : triples) {
    if (graph.Insert(t)) ++inserted;
  }
  return inserted;
}

// ---- N-Triples ----

class NTriplesReader {
 public:
  explicit NTriplesReader(std::string_view document)
      : tokens_(text::Tokenize(document)) {}

  std::vector<rdf::Triple> Read() {
    std::vector<rdf::Triple> out;
    while (!tokens_.AtEnd()) {
      const Token& first = tokens_.Peek();
      rdf::Term subject = ReadSubject();
      rdf::Term predicate = ReadPredicate();
      rdf::Term object = ReadObject();
      const Token& dot = tokens_.Peek();
      if (!dot.Is(TokenKind::kPunct, ".")) {
        tokens_.Fail("expected '.' but found " + text::Describe(dot));
      }
      if (dot.line != first.line) {
        tokens_.Fail("statement must end on the line it starts (line " +
                     std::to_string(first.line) + ")");
      }
      tokens_.Next();
      out.emplace_back(std::move(subject), std::move(predicate), std::move(object));
    }
    return out;
  }

 private:
  rdf::Term ReadSubject() {
    const Token& t = tokens_.Next();
    if (t.kind == TokenKind::kIriRef) return text::IriFromToken(t);
    if (t.kind == TokenKind::kBlankNode) return rdf::BlankNode(t.text);
    tokens_.FailAt(t, "expected IRI or blank node as subject, found " + text::Describe(t));
  }

  rdf::Term ReadPredicate() {
    const Token& t = tokens_.Next();
    if (t.kind == TokenKind::kIriRef) return text::IriFromToken(t);
    tokens_.FailAt(t, "expected IRI as predicate, found " + text::Describe(t));
  }

  rdf::Term ReadObject() {
    const Token& t = tokens_.Next();
    switch (t.kind) {
      case TokenKind::kIriRef:
        return text::IriFromToken(t);
      case TokenKind::kBlankNode:
        return rdf::BlankNode(t.text);
      case TokenKind::kString: {
        if (tokens_.Peek().kind == TokenKind::kLangTag) {
          return rdf::Literal::String(t.text, tokens_.Next().text);
        }
        if (tokens_.TryOperator("^^")) {
          const Token& dt = tokens_.Next();
          if (dt.kind != TokenKind::kIriRef) {
            tokens_.FailAt(dt, "expected datatype IRI, found " + text::Describe(dt));
          }
          return text::TypedLiteral(dt, t.text, text::IriFromToken(dt));
        }
        return rdf::Literal::String(t.text);
      }
      default:
        tokens_.FailAt(t, "expected object term, found " + text::Describe(t));
    }
  }

  TokenStream tokens_;
};

// ---- Turtle ----

class TurtleReader {
 public:
  explicit TurtleReader(std::string_view document) : tokens_(text::Tokenize(document)) {}

  std::vector<rdf::Triple> Read() {
    while (!tokens_.AtEnd()) {
      if (TryDirective()) continue;
      ReadTriples();
    }
    return std::move(out_);
  }

 private:
  bool TryDirective() {
    const Token& t = tokens_.Peek();
    if (t.kind == TokenKind::kAtKeyword) {
      if (t.text != "prefix") {
        tokens_.Fail("unsupported directive @" + t.text);
      }
      tokens_.Next();
      ReadPrefixBody();
      tokens_.ExpectPunct(".");
      return true;
    }
    if (tokens_.PeekKeyword("PREFIX") &&
        tokens_.Peek(1).kind == TokenKind::kPrefixedName) {
      tokens_.Next();
      ReadPrefixBody();
      return true;
    }
    if (tokens_.PeekKeyword("BASE") && tokens_.Peek(1).kind == TokenKind::kIriRef) {
      tokens_.Fail("BASE is not supported");
    }
    return false;
  }

  void ReadPrefixBody() {
    const Token& name = tokens_.Next();
    if (name.kind != TokenKind::kPrefixedName || name.text.back() != ':' ||
        name.text.find(':') != name.text.size() - 1) {
      tokens_.FailAt(name, "expected prefix name ending in ':', found " +
                               text::Describe(name));
    }
    const Token& iri = tokens_.Next();
    if (iri.kind != TokenKind::kIriRef) {
      tokens_.FailAt(iri, "expected namespace IRI, found " + text::Describe(iri));
    }
    prefixes_.Declare(name.text.substr(0, name.text.size() - 1), iri.text);
  }

  void ReadTriples() {
    rdf::Term subject = ReadSubject();
    while (true) {
      rdf::Term predicate = ReadVerb();
      while (true) {
        out_.emplace_back(subject, predicate, ReadObject());
        if (!tokens_.TryPunct(",")) break;
      }
      if (!tokens_.TryPunct(";")) break;
      // A trailing ';' before '.' is legal.
      while (tokens_.TryPunct(";")) {
      }
      if (tokens_.Peek().Is(TokenKind::kPunct, ".")) break;
    }
    tokens_.ExpectPunct(".");
  }

  void RejectUnsupported(const Token& t) {
    if (t.Is(TokenKind::kPunct, "[")) {
      tokens_.FailAt(t, "blank-node property lists '[ ]' are not supported");
    }
    if (t.Is(TokenKind::kPunct, "(")) {
      tokens_.FailAt(t, "collections '( )' are not supported");
    }
  }

  rdf::Iri ReadIri(const Token& t) {
    if (t.kind == TokenKind::kIriRef) return text::IriFromToken(t);
    if (t.kind == TokenKind::kPrefixedName) return prefixes_.Expand(t);
    tokens_.FailAt(t, "expected IRI, found " + text::Describe(t));
  }

  rdf::Term ReadSubject() {
    const Token& t = tokens_.Next();
    RejectUnsupported(t);
    if (t.kind == TokenKind::kBlankNode) return rdf::BlankNode(t.text);
    if (t.kind == TokenKind::kIriRef || t.kind == TokenKind::kPrefixedName) {
      return ReadIri(t);
    }
    tokens_.FailAt(t, "expected subject, found " + text::Describe(t));
  }

  rdf::Term ReadVerb() {
    const Token& t = tokens_.Next();
    if (t.Is(TokenKind::kName, "a")) return rdf::Iri(std::string(rdf::kRdfType));
    if (t.kind == TokenKind::kIriRef || t.kind == TokenKind::kPrefixedName) {
      return ReadIri(t);
    }
    tokens_.FailAt(t, "expected predicate, found " + text::Describe(t));
  }

  rdf::Term ReadObject() {
    const Token& t = tokens_.Next();
    RejectUnsupported(t);
    switch (t.kind) {
      case TokenKind::kIriRef:
      case TokenKind::kPrefixedName:
        return ReadIri(t);
      case TokenKind::kBlankNode:
        return rdf::BlankNode(t.text);
      case TokenKind::kString: {
        if (tokens_.Peek().kind == TokenKind::kLangTag) {
          return rdf::Literal::String(t.text, tokens_.Next().text);
        }
        if (tokens_.TryOperator("^^")) {
          const Token& dt = tokens_.Next();
          return text::TypedLiteral(dt, t.text, ReadIri(dt));
        }
        return rdf::Literal::String(t.text);
      }
      case TokenKind::kInteger:
      case TokenKind::kDecimal:
      case TokenKind::kDouble:
        return text::NumericLiteral(t, false);
      case TokenKind::kOperator:
        if (t.text == "+" || t.text == "-") {
          const Token& number = tokens_.Peek();
          const bool numeric = number.kind == TokenKind::kInteger ||
                               number.kind == TokenKind::kDecimal ||
                               number.kind == TokenKind::kDouble;
          if (numeric && number.offset == t.offset + 1) {
            tokens_.Next();
            return text::NumericLiteral(number, t.text == "-");
          }
        }
        break;
      case TokenKind::kName:
        if (t.text == "true" || t.text == "false") {
          return rdf::Literal::Boolean(t.text == "true");
        }
        break;
      default:
        break;
    }
    tokens_.FailAt(t, "expected object, found " + text::Describe(t));
  }

  TokenStream tokens_;
  text::PrefixMap prefixes_;
  std::vector<rdf::Triple> out_;
};

}  // namespace

std::size_t LoadNTriples(Graph& graph, std::string_view document) {
  return InsertAll(graph, NTriplesReader(document).Read());
}

std::size_t LoadTurtle(Graph& graph, std::string_view document) {
  return InsertAll(graph, TurtleReader(document).Read());
}

std::string SerializeNTriples(const Graph& graph) {
  std::vector<std::tuple<std::string, std::string, std::string>> rows;
  rows.reserve(graph.size());
  graph.ForEachMatch({}, [&rows](const rdf::Term& s, const rdf::Term& p, const rdf::Term& o) {
    rows.emplace_back(s.ToNTriples(), p.ToNTriples(), o.ToNTriples());
    return true;
  });
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [s, p, o] : rows) {
    out += s;
    out += ' ';
    out += p;
    out += ' ';
    out += o;
    out += " .\n";
  }
  return out;
}

}  // namespace climakg::store
