#include "climakg/text/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "climakg/errors.hpp"

namespace climakg::text {

namespace {

bool IsNameStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool IsNameChar(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

bool IsIriChar(unsigned char c) {
  if (c <= 0x20) return false;
  switch (c) {
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
      return false;
    default:
      return true;
  }
}

void AppendUtf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view input) : in_(input) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipSpaceAndComments();
      if (pos_ >= in_.size()) {
        out.push_back(Token{TokenKind::kEnd, "", line_, column_, pos_, 0});
        return out;
      }
      const TokenKind previous =
          out.empty() ? TokenKind::kEnd : out.back().kind;
      out.push_back(Lex(previous));
    }
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw SyntaxError(message, line_, column_);
  }

  char Cur(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }

  void Advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < in_.size(); ++i) {
      if (in_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void SkipSpaceAndComments() {
    while (pos_ < in_.size()) {
      const char c = in_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance();
      } else if (c == '#') {
        while (pos_ < in_.size() && in_[pos_] != '\n') Advance();
      } else {
        break;
      }
    }
  }

  Token Make(TokenKind kind, std::string text, std::size_t line, std::size_t col,
             std::size_t start) const {
    return Token{kind, std::move(text), line, col, start, pos_ - start};
  }

  Token Lex(TokenKind previous) {
    const std::size_t line = line_;
    const std::size_t col = column_;
    const std::size_t start = pos_;
    const unsigned char c = static_cast<unsigned char>(Cur());

    if (c == '<') {
      if (auto iri = TryIri()) return Make(TokenKind::kIriRef, *iri, line, col, start);
      Advance();
      if (Cur() == '=') {
        Advance();
        return Make(TokenKind::kOperator, "<=", line, col, start);
      }
      return Make(TokenKind::kOperator, "<", line, col, start);
    }
    if (c == '"' || c == '\'') {
      return Make(TokenKind::kString, LexString(), line, col, start);
    }
    if (c == '_' && Cur(1) == ':') {
      Advance(2);
      std::string label = LexNameChars(/*allow_dots=*/true);
      if (label.empty()) Fail("empty blank node label");
      return Make(TokenKind::kBlankNode, std::move(label), line, col, start);
    }
    if ((c == '?' || c == '$') && (IsNameStart(static_cast<unsigned char>(Cur(1))) ||
                                   std::isdigit(static_cast<unsigned char>(Cur(1))))) {
      Advance();
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(Cur())) || Cur() == '_' ||
             static_cast<unsigned char>(Cur()) >= 0x80) {
        name += Cur();
        Advance();
      }
      return Make(TokenKind::kVariable, std::move(name), line, col, start);
    }
    if (c == '@') {
      Advance();
      std::string word;
      while (std::isalnum(static_cast<unsigned char>(Cur())) || Cur() == '-') {
        word += Cur();
        Advance();
      }
      if (word.empty()) Fail("expected language tag or directive after '@'");
      const TokenKind kind =
          previous == TokenKind::kString ? TokenKind::kLangTag : TokenKind::kAtKeyword;
      return Make(kind, std::move(word), line, col, start);
    }
    if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(Cur(1))))) {
      return LexNumber(line, col, start);
    }
    if (IsNameStart(c) || c == ':') {
      return LexName(line, col, start);
    }

    switch (c) {
      case '{':
      case '}':
      case '(':
      case ')':
      case '[':
      case ']':
      case '.':
      case ';':
      case ',':
      case '*':
        Advance();
        return Make(TokenKind::kPunct, std::string(1, static_cast<char>(c)), line, col,
                    start);
      case '>':
      case '!':
      case '=':
        Advance();
        if (Cur() == '=' && c != '=') {
          Advance();
          return Make(TokenKind::kOperator, std::string(1, static_cast<char>(c)) + "=",
                      line, col, start);
        }
        return Make(TokenKind::kOperator, std::string(1, static_cast<char>(c)), line, col,
                    start);
      case '&':
      case '|':
        if (Cur(1) != static_cast<char>(c)) Fail(std::string("unexpected '") +
                                                  static_cast<char>(c) + "'");
        Advance(2);
        return Make(TokenKind::kOperator, std::string(2, static_cast<char>(c)), line, col,
                    start);
      case '^':
        if (Cur(1) != '^') Fail("unexpected '^'");
        Advance(2);
        return Make(TokenKind::kOperator, "^^", line, col, start);
      case '+':
      case '-':
      case '/':
        Advance();
        return Make(TokenKind::kOperator, std::string(1, static_cast<char>(c)), line, col,
                    start);
      default:
        break;
    }
    Fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
  }

  // Scans <...> when the bracket really opens an IRI reference. Leaves the
  // position untouched otherwise so '<' can be read as an operator.
  std::optional<std::string> TryIri() {
    std::size_t i = pos_ + 1;
    std::string value;
    while (i < in_.size()) {
      const unsigned char ch = static_cast<unsigned char>(in_[i]);
      if (ch == '>') {
        Advance(i + 1 - pos_);
        return value;
      }
      if (ch == '\\') {
        // \uXXXX and \UXXXXXXXX escapes only
        const char kind = i + 1 < in_.size() ? in_[i + 1] : '\0';
        const std::size_t width = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
        if (width == 0 || i + 2 + width > in_.size()) return std::nullopt;
        unsigned long cp = 0;
        for (std::size_t k = 0; k < width; ++k) {
          const char h = in_[i + 2 + k];
          if (!std::isxdigit(static_cast<unsigned char>(h))) return std::nullopt;
          cp = cp * 16 + static_cast<unsigned long>(
                             std::isdigit(static_cast<unsigned char>(h))
                                 ? h - '0'
                                 : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
        }
        AppendUtf8(value, cp);
        i += 2 + width;
        continue;
      }
      if (!IsIriChar(ch)) return std::nullopt;
      value += static_cast<char>(ch);
      ++i;
    }
    return std::nullopt;
  }

  std::string LexString() {
    const char quote = Cur();
    const bool long_form = Cur(1) == quote && Cur(2) == quote;
    Advance(long_form ? 3 : 1);
    std::string value;
    while (true) {
      if (pos_ >= in_.size()) Fail("unterminated string literal");
      const char ch = Cur();
      if (long_form) {
        if (ch == quote && Cur(1) == quote && Cur(2) == quote) {
          Advance(3);
          return value;
        }
      } else {
        if (ch == quote) {
          Advance();
          return value;
        }
        if (ch == '\n' || ch == '\r') Fail("newline in string literal");
      }
      if (ch == '\\') {
        LexEscape(value);
        continue;
      }
      value += ch;
      Advance();
    }
  }

  void LexEscape(std::string& value) {
    Advance();
    const char e = Cur();
    switch (e) {
      case 't':
        value += '\t';
        break;
      case 'b':
        value += '\b';
        break;
      case 'n':
        value += '\n';
        break;
      case 'r':
        value += '\r';
        break;
      case 'f':
        value += '\f';
        break;
      case '"':
        value += '"';
        break;
      case '\'':
        value += '\'';
        break;
      case '\\':
        value += '\\';
        break;
      case 'u':
      case 'U': {
        const std::size_t width = e == 'u' ? 4 : 8;
        unsigned long cp = 0;
        for (std::size_t k = 0; k < width; ++k) {
          const char h = Cur(1 + k);
          if (!std::isxdigit(static_cast<unsigned char>(h))) Fail("bad unicode escape");
          cp = cp * 16 + static_cast<unsigned long>(
                             std::isdigit(static_cast<unsigned char>(h))
                                 ? h - '0'
                                 : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
        }
        AppendUtf8(value, cp);
        Advance(width);
        break;
      }
      default:
        Fail(std::string("unknown escape '\\") + e + "'");
    }
    Advance();
  }

  // Reads name characters; with allow_dots, interior dots are kept but a
  // trailing dot is left for the statement terminator.
  std::string LexNameChars(bool allow_dots) {
    std::string out;
    while (pos_ < in_.size()) {
      const unsigned char ch = static_cast<unsigned char>(Cur());
      if (IsNameChar(ch)) {
        out += static_cast<char>(ch);
        Advance();
      } else if (allow_dots && ch == '.' &&
                 IsNameChar(static_cast<unsigned char>(Cur(1)))) {
        out += '.';
        Advance();
      } else {
        break;
      }
    }
    return out;
  }

  Token LexName(std::size_t line, std::size_t col, std::size_t start) {
    std::string prefix = Cur() == ':' ? std::string() : LexNameChars(true);
    if (Cur() != ':') return Make(TokenKind::kName, std::move(prefix), line, col, start);
    Advance();
    std::string local;
    while (pos_ < in_.size()) {
      const unsigned char ch = static_cast<unsigned char>(Cur());
      if (IsNameChar(ch) || ch == ':' || ch == '%') {
        local += static_cast<char>(ch);
        Advance();
      } else if (ch == '.' && (IsNameChar(static_cast<unsigned char>(Cur(1))) ||
                               Cur(1) == ':')) {
        local += '.';
        Advance();
      } else if (ch == '\\' && Cur(1) != '\0' &&
                 std::string_view("_~.-!$&'()*+,;=/?#@%").find(Cur(1)) !=
                     std::string_view::npos) {
        local += Cur(1);
        Advance(2);
      } else {
        break;
      }
    }
    return Make(TokenKind::kPrefixedName, prefix + ":" + local, line, col, start);
  }

  Token LexNumber(std::size_t line, std::size_t col, std::size_t start) {
    std::string out;
    TokenKind kind = TokenKind::kInteger;
    while (std::isdigit(static_cast<unsigned char>(Cur()))) {
      out += Cur();
      Advance();
    }
    if (Cur() == '.' && std::isdigit(static_cast<unsigned char>(Cur(1)))) {
      kind = TokenKind::kDecimal;
      out += '.';
      Advance();
      while (std::isdigit(static_cast<unsigned char>(Cur()))) {
        out += Cur();
        Advance();
      }
    }
    if (Cur() == 'e' || Cur() == 'E') {
      std::size_t look = 1;
      if (Cur(1) == '+' || Cur(1) == '-') look = 2;
      if (std::isdigit(static_cast<unsigned char>(Cur(look)))) {
        kind = TokenKind::kDouble;
        for (std::size_t k = 0; k < look; ++k) {
          out += Cur();
          Advance();
        }
        while (std::isdigit(static_cast<unsigned char>(Cur()))) {
          out += Cur();
          Advance();
        }
      }
    }
    return Make(kind, std::move(out), line, col, start);
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::toupper(static_cast<unsigned char>(x)) ==
                  std::toupper(static_cast<unsigned char>(y));
         });
}

}  // namespace

const char* TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIriRef:
      return "IRI";
    case TokenKind::kPrefixedName:
      return "prefixed name";
    case TokenKind::kBlankNode:
      return "blank node";
    case TokenKind::kVariable:
      return "variable";
    case TokenKind::kString:
      return "string";
    case TokenKind::kLangTag:
      return "language tag";
    case TokenKind::kAtKeyword:
      return "directive";
    case TokenKind::kInteger:
    case TokenKind::kDecimal:
    case TokenKind::kDouble:
      return "number";
    case TokenKind::kName:
      return "name";
    case TokenKind::kPunct:
      return "punctuation";
    case TokenKind::kOperator:
      return "operator";
    case TokenKind::kEnd:
      return "end of input";
  }
  return "token";
}

std::string Describe(const Token& token) {
  if (token.kind == TokenKind::kEnd) return "end of input";
  return std::string(TokenKindName(token.kind)) + " '" + token.text + "'";
}

std::vector<Token> Tokenize(std::string_view input) { return Lexer(input).Run(); }

const Token& TokenStream::Peek(std::size_t ahead) const {
  const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[i];
}

const Token& TokenStream::Next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::TryPunct(std::string_view p) {
  if (Peek().Is(TokenKind::kPunct, p)) {
    Next();
    return true;
  }
  return false;
}

bool TokenStream::TryOperator(std::string_view op) {
  if (Peek().Is(TokenKind::kOperator, op)) {
    Next();
    return true;
  }
  return false;
}

bool TokenStream::PeekKeyword(std::string_view word, std::size_t ahead) const {
  const Token& t = Peek(ahead);
  return t.kind == TokenKind::kName && EqualsIgnoreCase(t.text, word);
}

bool TokenStream::TryKeyword(std::string_view word) {
  if (PeekKeyword(word)) {
    Next();
    return true;
  }
  return false;
}

void TokenStream::ExpectPunct(std::string_view p) {
  if (!TryPunct(p)) Fail("expected '" + std::string(p) + "' but found " + Describe(Peek()));
}

void TokenStream::ExpectKeyword(std::string_view word) {
  if (!TryKeyword(word)) {
    Fail("expected " + std::string(word) + " but found " + Describe(Peek()));
  }
}

void TokenStream::Fail(const std::string& message) const { FailAt(Peek(), message); }

void TokenStream::FailAt(const Token& token, const std::string& message) const {
  throw SyntaxError(message, token.line, token.column);
}

}  // namespace climakg::text
