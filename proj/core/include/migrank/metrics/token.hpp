#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace migrank::metrics {

enum class TokenKind : std::uint8_t {
  identifier,
  keyword,
  number_literal,
  string_literal,  // includes text blocks
  char_literal,
  annotation,  // '@' glued to the following (possibly qualified) name
  operator_,
  punctuation,  // ( ) { } [ ] ; , .
};

struct Token {
  TokenKind kind = TokenKind::identifier;
  std::string text;
  int line = 1;

  bool is(TokenKind k) const { return kind == k; }
  bool is_keyword(const char* word) const {
    return kind == TokenKind::keyword && text == word;
  }
  bool is_punct(const char* p) const {
    return kind == TokenKind::punctuation && text == p;
  }
  bool is_op(const char* op) const { return kind == TokenKind::operator_ && text == op; }
};

using TokenStream = std::vector<Token>;

}  // namespace migrank::metrics
