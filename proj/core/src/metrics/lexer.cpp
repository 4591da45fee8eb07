#include "migrank/metrics/lexer.hpp"

#include <array>
#include <cctype>
#include <cstring>
#include <string_view>
#include <unordered_set>

#include "migrank/errors.hpp"

namespace migrank::metrics {

namespace {

const std::unordered_set<std::string_view>& keyword_set() {
  // Boolean and null literals are lumped in so that they never count as
  // identifiers elsewhere.
  static const std::unordered_set<std::string_view> kws = {
      "abstract", "assert",   "boolean",   "break",      "byte",    "case",
      "catch",    "char",     "class",     "const",      "continue", "default",
      "do",       "double",   "else",      "enum",       "extends", "final",
      "finally",  "float",    "for",       "goto",       "if",      "implements",
      "import",   "instanceof", "int",     "interface",  "long",    "native",
      "new",      "package",  "private",   "protected",  "public",  "return",
      "short",    "static",   "strictfp",  "super",      "switch",  "synchronized",
      "this",     "throw",    "throws",    "transient",  "try",     "void",
      "volatile", "while",    "true",      "false",      "null"};
  return kws;
}

// Multi-character operators, longest first so maximal munch works by scanning
// the table in order.
constexpr std::array<std::string_view, 24> kMultiOps = {
    ">>>=", ">>>", ">>=", "<<=", "->", "::", "++", "--", "&&", "||", "<=",
    ">=",   "==",  "!=",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    ">>",   "<<"};

constexpr std::string_view kSingleOps = "+-*/%=<>!&|^~?:";

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
bool is_ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

class Lexer {
 public:
  Lexer(const std::string& src, std::vector<std::string>* diagnostics)
      : src_(src), diagnostics_(diagnostics) {}

  TokenStream run() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '\n') {
        ++line_;
        ++i_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
      } else if (c == '/' && peek(1) == '/') {
        while (i_ < src_.size() && src_[i_] != '\n') ++i_;
      } else if (c == '/' && peek(1) == '*') {
        block_comment();
      } else if (c == '"') {
        string_literal();
      } else if (c == '\'') {
        char_literal();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        number();
      } else if (is_ident_start(static_cast<unsigned char>(c))) {
        word();
      } else if (c == '@') {
        annotation();
      } else {
        symbol();
      }
    }
    return std::move(tokens_);
  }

 private:
  char peek(std::size_t ahead) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }

  void emit(TokenKind kind, std::string text, int line) {
    tokens_.push_back({kind, std::move(text), line});
  }

  void unterminated(const char* what, int start_line) {
    if (diagnostics_) {
      diagnostics_->push_back("unterminated " + std::string(what) + " at line " +
                              std::to_string(start_line) + ", closed at end of input");
      return;
    }
    throw UnterminatedLiteral(start_line, what);
  }

  void block_comment() {
    int start = line_;
    i_ += 2;
    while (i_ < src_.size()) {
      if (src_[i_] == '*' && peek(1) == '/') {
        i_ += 2;
        return;
      }
      if (src_[i_] == '\n') ++line_;
      ++i_;
    }
    unterminated("block comment", start);
  }

  void string_literal() {
    int start = line_;
    if (peek(1) == '"' && peek(2) == '"') {
      text_block(start);
      return;
    }
    std::size_t begin = i_;
    ++i_;
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '\\' && i_ + 1 < src_.size()) {
        i_ += 2;
        continue;
      }
      if (c == '"') {
        ++i_;
        emit(TokenKind::string_literal, src_.substr(begin, i_ - begin), start);
        return;
      }
      if (c == '\n') break;  // strings do not span lines
      ++i_;
    }
    unterminated("string literal", start);
    emit(TokenKind::string_literal, src_.substr(begin, i_ - begin), start);
  }

  void text_block(int start) {
    std::size_t begin = i_;
    i_ += 3;
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '\\' && i_ + 1 < src_.size()) {
        i_ += 2;
        continue;
      }
      if (c == '"' && peek(1) == '"' && peek(2) == '"') {
        i_ += 3;
        emit(TokenKind::string_literal, src_.substr(begin, i_ - begin), start);
        return;
      }
      if (c == '\n') ++line_;
      ++i_;
    }
    unterminated("text block", start);
    emit(TokenKind::string_literal, src_.substr(begin, i_ - begin), start);
  }

  void char_literal() {
    int start = line_;
    std::size_t begin = i_;
    ++i_;
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '\\' && i_ + 1 < src_.size()) {
        i_ += 2;
        continue;
      }
      if (c == '\'') {
        ++i_;
        emit(TokenKind::char_literal, src_.substr(begin, i_ - begin), start);
        return;
      }
      if (c == '\n') break;
      ++i_;
    }
    unterminated("character literal", start);
    emit(TokenKind::char_literal, src_.substr(begin, i_ - begin), start);
  }

  void number() {
    std::size_t begin = i_;
    auto digit_run = [&](auto pred) {
      while (i_ < src_.size() &&
             (pred(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
        ++i_;
    };
    if (src_[i_] == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      i_ += 2;
      digit_run([](unsigned char c) { return std::isxdigit(c); });
    } else if (src_[i_] == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
      i_ += 2;
      digit_run([](unsigned char c) { return c == '0' || c == '1'; });
    } else {
      digit_run([](unsigned char c) { return std::isdigit(c); });
      if (i_ < src_.size() && src_[i_] == '.' &&
          std::isdigit(static_cast<unsigned char>(peek(1)))) {
        ++i_;
        digit_run([](unsigned char c) { return std::isdigit(c); });
      } else if (i_ < src_.size() && src_[i_] == '.' &&
                 std::strchr("fFdD", peek(1)) &&
                 !is_ident_char(static_cast<unsigned char>(peek(2)))) {
        ++i_;  // forms like "1.f"
      }
      if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
        std::size_t mark = i_;
        ++i_;
        if (i_ < src_.size() && (src_[i_] == '+' || src_[i_] == '-')) ++i_;
        if (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])))
          digit_run([](unsigned char c) { return std::isdigit(c); });
        else
          i_ = mark;
      }
    }
    if (i_ < src_.size() && std::strchr("lLfFdD", src_[i_])) ++i_;
    emit(TokenKind::number_literal, src_.substr(begin, i_ - begin), line_);
  }

  void word() {
    std::size_t begin = i_;
    while (i_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[i_]))) ++i_;
    std::string text = src_.substr(begin, i_ - begin);
    // Classify before emit: the move below may be sequenced first otherwise.
    TokenKind kind =
        keyword_set().count(text) ? TokenKind::keyword : TokenKind::identifier;
    emit(kind, std::move(text), line_);
  }

  void annotation() {
    int start = line_;
    std::size_t begin = i_;
    ++i_;
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) {
      if (src_[i_] == '\n') ++line_;
      ++i_;
    }
    if (i_ >= src_.size() || !is_ident_start(static_cast<unsigned char>(src_[i_]))) {
      emit(TokenKind::operator_, "@", start);
      return;
    }
    std::string name = "@";
    while (i_ < src_.size()) {
      std::size_t word_begin = i_;
      while (i_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[i_]))) ++i_;
      name += src_.substr(word_begin, i_ - word_begin);
      if (i_ < src_.size() && src_[i_] == '.' &&
          is_ident_start(static_cast<unsigned char>(peek(1)))) {
        name += '.';
        ++i_;
        continue;
      }
      break;
    }
    (void)begin;
    emit(TokenKind::annotation, std::move(name), start);
  }

  void symbol() {
    char c = src_[i_];
    if (c == '.' && peek(1) == '.' && peek(2) == '.') {
      emit(TokenKind::punctuation, "...", line_);
      i_ += 3;
      return;
    }
    if (std::strchr("(){}[];,.", c)) {
      emit(TokenKind::punctuation, std::string(1, c), line_);
      ++i_;
      return;
    }
    std::string_view rest(src_.data() + i_, src_.size() - i_);
    for (std::string_view op : kMultiOps) {
      if (rest.substr(0, op.size()) == op) {
        emit(TokenKind::operator_, std::string(op), line_);
        i_ += op.size();
        return;
      }
    }
    if (kSingleOps.find(c) != std::string_view::npos) {
      emit(TokenKind::operator_, std::string(1, c), line_);
      ++i_;
      return;
    }
    // Anything unrecognized (stray backslash, control byte) is dropped.
    ++i_;
  }

  const std::string& src_;
  std::vector<std::string>* diagnostics_;
  TokenStream tokens_;
  std::size_t i_ = 0;
  int line_ = 1;
};

}  // namespace

TokenStream lex(const std::string& source) { return Lexer(source, nullptr).run(); }

TokenStream lex_lenient(const std::string& source, std::vector<std::string>& diagnostics) {
  return Lexer(source, &diagnostics).run();
}

bool is_java_keyword(const std::string& word) { return keyword_set().count(word) > 0; }

}  // namespace migrank::metrics
