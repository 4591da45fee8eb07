#pragma once

#include <string>

#include "migrank/metrics/source_model.hpp"

namespace migrank::metrics {

// Recovers the declaration structure of one Java file: package, imports,
// named types with their fields and methods, plus anonymous-class sites.
// Method bodies and field initializers are kept as raw token ranges.
//
// The parser never throws. Source it cannot make sense of is skipped token by
// token and, where the damage is structural (for instance braces that never
// close), a diagnostic is recorded and the innermost open scope absorbs the
// remainder of the file.
SourceModel parse_structure(const std::string& source);

// Variant over an already-lexed stream; takes ownership of the tokens.
SourceModel parse_structure(TokenStream tokens, std::vector<std::string> diagnostics);

}  // namespace migrank::metrics
