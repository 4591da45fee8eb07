#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "migrank/metrics/token.hpp"

namespace migrank::metrics {

enum class TypeKind : std::uint8_t { class_, interface_, enum_, annotation_ };

// Token index ranges are half-open [begin, end) into the lexed stream.
struct FieldDecl {
  std::string name;
  std::string type_name;  // simple name, generics and array brackets erased
  std::vector<std::string> modifiers;
  std::size_t init_begin = 0, init_end = 0;  // initializer expression, if any
  int declared_line = 0;
};

struct MethodDecl {
  std::string name;
  std::string return_type;  // empty for constructors
  std::vector<std::string> modifiers;
  std::vector<std::string> parameter_types;  // simple names, in order
  bool is_constructor = false;
  bool has_body = false;
  std::size_t body_begin = 0, body_end = 0;  // tokens inside the braces
  int declared_line = 0;
};

struct TypeDecl {
  std::string name;  // empty for anonymous classes
  TypeKind kind = TypeKind::class_;
  std::vector<std::string> modifiers;
  std::string extends_name;                 // simple name or empty
  std::vector<std::string> implements_names;
  int nesting_depth = 0;   // 0 = top level
  bool is_anonymous = false;
  int parent = -1;         // index into SourceModel::types, -1 at top level
  std::size_t decl_begin = 0;                // first token of the declaration
  std::size_t body_begin = 0, body_end = 0;  // tokens between the braces
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  int declared_line = 0;
};

// Per-token marks produced alongside parsing. Kept parallel to the token
// stream so lexical counters can skip over generics and switch arrows.
enum TokenMark : std::uint8_t {
  kMarkNone = 0,
  kMarkGenericArgs = 1,  // token sits inside a type argument or parameter list
  kMarkSwitchArrow = 2,  // an "->"" that belongs to a switch rule, not a lambda
};

struct SourceModel {
  std::string package_name;
  std::vector<std::string> imports;  // qualified names as written, no "static"
  std::vector<TypeDecl> types;       // declaration order, outer before inner
  TokenStream tokens;
  std::vector<std::uint8_t> marks;   // TokenMark bits, one per token
  std::vector<std::string> diagnostics;
};

}  // namespace migrank::metrics
