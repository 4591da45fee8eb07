#pragma once

#include <string>
#include <vector>

#include "migrank/metrics/token.hpp"

namespace migrank::metrics {

// Tokenizes Java source. Comments and whitespace are dropped; line numbers
// are kept on every token. String literals (including text blocks), char
// literals and numeric literals come out as single tokens with their source
// spelling. Bytes outside ASCII are treated as identifier characters, so
// Unicode identifiers survive without being decoded.
//
// A string, character or block comment still open at end of input raises
// UnterminatedLiteral with the line it started on.
TokenStream lex(const std::string& source);

// Same scanner, but an unterminated literal or comment is silently closed at
// end of input and a note is appended to diagnostics instead of throwing.
TokenStream lex_lenient(const std::string& source, std::vector<std::string>& diagnostics);

bool is_java_keyword(const std::string& word);

}  // namespace migrank::metrics
