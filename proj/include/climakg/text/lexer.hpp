#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace climakg::text {

enum class TokenKind {
  kIriRef,         // <...>; text holds the IRI without brackets
  kPrefixedName,   // prefix:local; text holds "prefix:local"
  kBlankNode,      // _:label; text holds the label
  kVariable,       // ?name or $name; text holds the name
  kString,         // quoted string; text holds the unescaped value
  kLangTag,        // @tag directly after a string; text holds the tag
  kAtKeyword,      // @prefix / @base; text holds the word
  kInteger,        // unsigned lexical forms
  kDecimal,
  kDouble,
  kName,           // bare word: keywords, 'a', true/false, function names
  kPunct,          // { } ( ) [ ] . ; , *
  kOperator,       // < <= > >= = != && || ! + - / ^^
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  // Byte offset of the first character; used to detect adjacency
  // (e.g. a sign glued to a number).
  std::size_t offset;
  std::size_t length;

  bool Is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

const char* TokenKindName(TokenKind kind);

// Splits a Turtle / N-Triples / SPARQL document into tokens. The returned
// vector always ends with a kEnd token. Throws SyntaxError with the line and
// column of the offending character.
std::vector<Token> Tokenize(std::string_view input);

// Cursor over a token vector with helpers for the recursive-descent parsers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& Peek(std::size_t ahead = 0) const;
  const Token& Next();
  bool AtEnd() const { return Peek().kind == TokenKind::kEnd; }

  bool TryPunct(std::string_view p);
  bool TryOperator(std::string_view op);
  // Case-insensitive match of a bare keyword.
  bool TryKeyword(std::string_view word);
  bool PeekKeyword(std::string_view word, std::size_t ahead = 0) const;

  void ExpectPunct(std::string_view p);
  void ExpectKeyword(std::string_view word);

  [[noreturn]] void Fail(const std::string& message) const;
  [[noreturn]] void FailAt(const Token& token, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string Describe(const Token& token);

}  // namespace climakg::text
