#include "migrank/metrics/structure_parser.hpp"

#include <unordered_set>

#include "migrank/metrics/lexer.hpp"

namespace migrank::metrics {

namespace {

const std::unordered_set<std::string>& modifier_keywords() {
  static const std::unordered_set<std::string> mods = {
      "public", "private",      "protected", "static",   "final",
      "abstract", "synchronized", "native",    "strictfp", "transient",
      "volatile", "default"};
  return mods;
}

bool is_primitive_or_void(const Token& t) {
  if (t.kind != TokenKind::keyword) return false;
  static const std::unordered_set<std::string> prims = {
      "void", "int", "long", "short", "byte", "char", "float", "double", "boolean"};
  return prims.count(t.text) > 0;
}

// --- token mark passes -----------------------------------------------------

// Decides whether the '<' at index i opens a type-argument/parameter list.
// Mimics the speculative scan a compiler front end does: the run up to the
// matching '>' may only contain tokens legal inside type arguments, and the
// token after the close must be one a type use can be followed by. Returns
// the index of the closing token, or 0 on failure.
//
// One genuinely ambiguous shape exists: "f(a<b, c>d)" could be two
// comparisons. It is read as a generic type here, favouring the far more
// common declaration form "Map<K, V> d".
std::size_t match_generic(const TokenStream& ts, std::size_t i) {
  static constexpr std::size_t kScanLimit = 400;
  int depth = 0;
  std::size_t j = i;
  for (std::size_t steps = 0; j < ts.size() && steps < kScanLimit; ++j, ++steps) {
    const Token& t = ts[j];
    if (t.kind == TokenKind::operator_) {
      if (t.text == "<")
        depth += 1;
      else if (t.text == ">")
        depth -= 1;
      else if (t.text == ">>")
        depth -= 2;
      else if (t.text == ">>>")
        depth -= 3;
      else if (t.text == "?" || t.text == "&")
        ;  // wildcard, intersection bound
      else
        return 0;
    } else if (t.kind == TokenKind::identifier || t.kind == TokenKind::annotation) {
      ;
    } else if (t.kind == TokenKind::keyword) {
      if (t.text != "extends" && t.text != "super" && !is_primitive_or_void(t))
        return 0;
    } else if (t.kind == TokenKind::punctuation) {
      if (t.text != "." && t.text != "," && t.text != "[" && t.text != "]") return 0;
    } else {
      return 0;  // literals never appear in type arguments
    }
    if (depth < 0) return 0;
    if (depth == 0 && j > i) {
      if (j + 1 >= ts.size()) return j;
      const Token& next = ts[j + 1];
      switch (next.kind) {
        case TokenKind::identifier:
          return j;
        case TokenKind::operator_:
          return next.text == "::" || next.text == "&" ? j : 0;
        case TokenKind::keyword:
          if (next.text == "extends" || next.text == "implements" ||
              next.text == "throws" || is_primitive_or_void(next))
            return j;
          return 0;
        case TokenKind::punctuation: {
          if (next.text == "." || next.text == "," || next.text == "{" ||
              next.text == "[" || next.text == ")" || next.text == ">")
            return j;
          if (next.text == "(") {
            // "new ArrayList<>(...)" and "Outer.<T>call(...)"; a bare
            // "a<b>(c)" without such context stays a pair of comparisons.
            if (i >= 2 && ts[i - 1].kind == TokenKind::identifier &&
                (ts[i - 2].is_keyword("new") || ts[i - 2].is_punct(".")))
              return j;
            return 0;
          }
          return 0;
        }
        default:
          return 0;
      }
    }
  }
  return 0;
}

void mark_generics(const TokenStream& ts, std::vector<std::uint8_t>& marks) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (marks[i] & kMarkGenericArgs) continue;
    if (!ts[i].is_op("<")) continue;
    bool plausible_before =
        i == 0 || ts[i - 1].kind == TokenKind::identifier ||
        ts[i - 1].kind == TokenKind::annotation ||
        (ts[i - 1].kind == TokenKind::keyword && modifier_keywords().count(ts[i - 1].text)) ||
        ts[i - 1].is_punct(".") || ts[i - 1].is_punct(";") || ts[i - 1].is_punct("{") ||
        ts[i - 1].is_punct("}");
    if (!plausible_before) continue;
    std::size_t close = match_generic(ts, i);
    if (close == 0) continue;
    for (std::size_t j = i; j <= close; ++j) marks[j] |= kMarkGenericArgs;
    i = close;
  }
}

void mark_switch_arrows(const TokenStream& ts, std::vector<std::uint8_t>& marks) {
  bool in_case_label = false;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Token& t = ts[i];
    if (t.is_keyword("case") || t.is_keyword("default")) {
      in_case_label = true;
    } else if (t.is_punct(";") || t.is_punct("{") || t.is_punct("}") || t.is_op(":")) {
      in_case_label = false;
    } else if (t.is_op("->")) {
      if (in_case_label) marks[i] |= kMarkSwitchArrow;
      in_case_label = false;
    }
  }
}

// --- declaration parser ----------------------------------------------------

struct TypeRef {
  std::string base;  // last simple name, or primitive keyword
  bool valid = false;
  bool qualified = false;
  bool generic = false;
};

class StructureParser {
 public:
  StructureParser(TokenStream tokens, std::vector<std::string> diagnostics) {
    model_.tokens = std::move(tokens);
    model_.diagnostics = std::move(diagnostics);
    model_.marks.assign(model_.tokens.size(), kMarkNone);
    mark_generics(model_.tokens, model_.marks);
    mark_switch_arrows(model_.tokens, model_.marks);
  }

  SourceModel run() {
    parse_package();
    parse_imports();
    std::vector<std::string> pending;
    std::size_t decl_begin = pos_;
    while (!at_end()) {
      if (!collect_prefix(pending, decl_begin)) continue;
      if (at_type_keyword()) {
        parse_type(-1, 0, pending, decl_begin);
      } else {
        advance();
      }
      pending.clear();
      decl_begin = pos_;
    }
    return std::move(model_);
  }

 private:
  const Token& cur() const { return model_.tokens[pos_]; }
  const Token& peek(std::size_t ahead) const {
    static const Token eof{TokenKind::punctuation, "", 0};
    return pos_ + ahead < model_.tokens.size() ? model_.tokens[pos_ + ahead] : eof;
  }
  bool at_end() const { return pos_ >= model_.tokens.size(); }
  void advance() { ++pos_; }
  bool marked_generic() const {
    return !at_end() && (model_.marks[pos_] & kMarkGenericArgs);
  }

  void skip_generic_args() {
    while (marked_generic()) advance();
  }

  void skip_annotation() {
    advance();
    if (!at_end() && cur().is_punct("(")) skip_balanced("(", ")");
  }

  // Consumes from an opening token through its matching close; tolerates EOF.
  void skip_balanced(const char* open, const char* close) {
    int depth = 0;
    while (!at_end()) {
      if (cur().is_punct(open))
        ++depth;
      else if (cur().is_punct(close))
        --depth;
      advance();
      if (depth == 0) return;
    }
  }

  void parse_package() {
    if (at_end() || !cur().is_keyword("package")) return;
    advance();
    std::string name;
    while (!at_end() && !cur().is_punct(";")) {
      name += cur().text;
      advance();
    }
    if (!at_end()) advance();
    model_.package_name = name;
  }

  void parse_imports() {
    while (!at_end() && cur().is_keyword("import")) {
      advance();
      if (!at_end() && cur().is_keyword("static")) advance();
      std::string name;
      while (!at_end() && !cur().is_punct(";")) {
        if (cur().is_op("*"))
          name += "*";
        else
          name += cur().text;
        advance();
      }
      if (!at_end()) advance();
      if (!name.empty()) model_.imports.push_back(name);
    }
  }

  // Accumulates modifiers and skips annotations before a declaration.
  // Returns false when the caller should restart the loop (a token was
  // consumed without reaching anything declaration-like).
  bool collect_prefix(std::vector<std::string>& pending, std::size_t& decl_begin) {
    if (pending.empty()) decl_begin = pos_;
    while (!at_end()) {
      if (cur().kind == TokenKind::annotation && cur().text != "@interface") {
        skip_annotation();
      } else if (cur().kind == TokenKind::keyword && modifier_keywords().count(cur().text)) {
        // "default" introduces a switch label too; only treat it as a
        // modifier when a declaration can actually follow.
        if (cur().text == "default" && (peek(1).is_op(":") || peek(1).is_op("->"))) break;
        pending.push_back(cur().text);
        advance();
      } else {
        break;
      }
    }
    return !at_end();
  }

  bool at_type_keyword() const {
    if (at_end()) return false;
    return cur().is_keyword("class") || cur().is_keyword("interface") ||
           cur().is_keyword("enum") ||
           (cur().kind == TokenKind::annotation && cur().text == "@interface");
  }

  void parse_type(int parent, int depth, std::vector<std::string> modifiers,
                  std::size_t decl_begin) {
    TypeKind kind = TypeKind::class_;
    if (cur().is_keyword("interface")) kind = TypeKind::interface_;
    if (cur().is_keyword("enum")) kind = TypeKind::enum_;
    if (cur().kind == TokenKind::annotation) kind = TypeKind::annotation_;
    int line = cur().line;
    advance();
    if (at_end() || cur().kind != TokenKind::identifier) {
      model_.diagnostics.push_back("type declaration without a name near line " +
                                   std::to_string(line));
      return;
    }

    int index = static_cast<int>(model_.types.size());
    TypeDecl decl;
    decl.name = cur().text;
    decl.kind = kind;
    decl.modifiers = std::move(modifiers);
    decl.nesting_depth = depth;
    decl.parent = parent;
    decl.declared_line = line;
    decl.decl_begin = decl_begin;
    model_.types.push_back(std::move(decl));
    advance();
    skip_generic_args();

    if (!at_end() && cur().is_keyword("extends")) {
      advance();
      TypeRef ref = parse_type_ref();
      if (ref.valid) model_.types[index].extends_name = ref.base;
      while (!at_end() && cur().is_punct(",")) {
        advance();
        TypeRef extra = parse_type_ref();  // interfaces may extend several
        if (extra.valid) model_.types[index].implements_names.push_back(extra.base);
      }
    }
    if (!at_end() && cur().is_keyword("implements")) {
      advance();
      while (true) {
        TypeRef ref = parse_type_ref();
        if (ref.valid) model_.types[index].implements_names.push_back(ref.base);
        if (!at_end() && cur().is_punct(",")) {
          advance();
          continue;
        }
        break;
      }
    }
    // Anything else before the body ("permits", stray junk) is skipped.
    while (!at_end() && !cur().is_punct("{") && !cur().is_punct(";")) advance();
    if (at_end() || cur().is_punct(";")) {
      if (!at_end()) advance();
      model_.types[index].body_begin = model_.types[index].body_end = pos_;
      return;
    }
    advance();  // '{'
    model_.types[index].body_begin = pos_;
    parse_type_body(index, depth);
  }

  void parse_type_body(int type_index, int depth) {
    std::vector<std::string> pending;
    std::size_t decl_begin = pos_;
    while (true) {
      if (at_end()) {
        model_.diagnostics.push_back(
            "unbalanced braces: body of type '" + model_.types[type_index].name +
            "' absorbs the rest of the file");
        model_.types[type_index].body_end = pos_;
        return;
      }
      if (cur().is_punct("}")) {
        model_.types[type_index].body_end = pos_;
        advance();
        return;
      }
      if (!collect_prefix(pending, decl_begin)) continue;
      if (cur().is_punct("}")) continue;
      if (at_type_keyword()) {
        parse_type(type_index, depth + 1, std::move(pending), decl_begin);
      } else if (cur().is_punct(";")) {
        advance();
      } else if (cur().is_punct("{")) {
        skip_body_recording_anonymous(type_index, depth);  // initializer block
      } else {
        parse_member(type_index, depth, pending);
      }
      pending.clear();
      decl_begin = pos_;
    }
  }

  void parse_member(int type_index, int depth, std::vector<std::string>& modifiers) {
    std::size_t start = pos_;
    int line = cur().line;
    skip_generic_args();  // generic method's type parameters
    TypeRef ref = parse_type_ref();
    if (!ref.valid) {
      pos_ = start + 1;
      return;
    }

    const std::string owner_name = model_.types[type_index].name;
    if (!at_end() && cur().is_punct("(") && !ref.qualified && !ref.generic &&
        ref.base == owner_name) {
      MethodDecl ctor;
      ctor.name = ref.base;
      ctor.is_constructor = true;
      ctor.modifiers = modifiers;
      ctor.declared_line = line;
      finish_method(type_index, depth, std::move(ctor));
      return;
    }

    if (at_end() || cur().kind != TokenKind::identifier) {
      pos_ = start + 1;
      return;
    }
    std::string member_name = cur().text;
    advance();

    if (!at_end() && cur().is_punct("(")) {
      MethodDecl method;
      method.name = std::move(member_name);
      method.return_type = ref.base;
      method.modifiers = modifiers;
      method.declared_line = line;
      finish_method(type_index, depth, std::move(method));
      return;
    }

    // Field declarator list: name [=init] {, name [=init]} ;
    while (true) {
      FieldDecl field;
      field.name = member_name;
      field.type_name = ref.base;
      field.modifiers = modifiers;
      field.declared_line = line;
      while (!at_end() && cur().is_punct("[") && peek(1).is_punct("]")) {
        advance();
        advance();
      }
      if (!at_end() && cur().is_op("=")) {
        advance();
        field.init_begin = pos_;
        skip_initializer(type_index, depth);
        field.init_end = pos_;
      }
      model_.types[type_index].fields.push_back(std::move(field));
      if (!at_end() && cur().is_punct(",")) {
        advance();
        if (at_end() || cur().kind != TokenKind::identifier) break;
        member_name = cur().text;
        advance();
        continue;
      }
      if (!at_end() && cur().is_punct(";")) advance();
      break;
    }
  }

  void finish_method(int type_index, int depth, MethodDecl method) {
    advance();  // '('
    while (!at_end() && !cur().is_punct(")")) {
      if (cur().kind == TokenKind::annotation) {
        skip_annotation();
        continue;
      }
      if (cur().is_keyword("final")) {
        advance();
        continue;
      }
      TypeRef ptype = parse_type_ref();
      if (!ptype.valid) {
        advance();
        continue;
      }
      if (!at_end() && cur().is_punct("...")) advance();
      if (!at_end() &&
          (cur().kind == TokenKind::identifier || cur().is_keyword("this")))
        advance();
      while (!at_end() && cur().is_punct("[") && peek(1).is_punct("]")) {
        advance();
        advance();
      }
      method.parameter_types.push_back(ptype.base);
      if (!at_end() && cur().is_punct(",")) advance();
    }
    if (!at_end()) advance();  // ')'

    if (!at_end() && cur().is_keyword("throws")) {
      advance();
      while (true) {
        TypeRef thrown = parse_type_ref();
        (void)thrown;
        if (!at_end() && cur().is_punct(",")) {
          advance();
          continue;
        }
        break;
      }
    }
    if (!at_end() && cur().is_keyword("default")) {
      // annotation-member default value
      while (!at_end() && !cur().is_punct(";")) advance();
    }
    if (!at_end() && cur().is_punct("{")) {
      method.has_body = true;
      advance();
      method.body_begin = pos_;
      method.body_end = skip_body_inner(type_index, depth);
    } else if (!at_end() && cur().is_punct(";")) {
      advance();
    }
    model_.types[type_index].methods.push_back(std::move(method));
  }

  // Skips a brace-balanced region whose '{' is current; records any
  // anonymous-class site found inside against the given named type.
  void skip_body_recording_anonymous(int type_index, int depth) {
    advance();  // '{'
    skip_body_inner(type_index, depth);
  }

  // Cursor already inside the braces; returns the index of the closing '}'
  // (or end of input) and leaves the cursor past it.
  std::size_t skip_body_inner(int type_index, int depth) {
    int brace = 1;
    while (!at_end()) {
      if (cur().is_punct("{")) {
        ++brace;
      } else if (cur().is_punct("}")) {
        --brace;
        if (brace == 0) {
          std::size_t close = pos_;
          advance();
          return close;
        }
      } else if (cur().is_keyword("new")) {
        note_anonymous_site(type_index, depth);
      }
      advance();
    }
    model_.diagnostics.push_back("unbalanced braces inside '" +
                                 model_.types[type_index].name +
                                 "': block absorbs the rest of the file");
    return pos_;
  }

  // Looks ahead from a "new" token for `new Name(...) {` without consuming.
  void note_anonymous_site(int type_index, int depth) {
    std::size_t j = pos_ + 1;
    const auto& ts = model_.tokens;
    if (j >= ts.size() || ts[j].kind != TokenKind::identifier) return;
    int site_line = ts[j].line;
    ++j;
    while (j + 1 < ts.size() && ts[j].is_punct(".") &&
           ts[j + 1].kind == TokenKind::identifier)
      j += 2;
    while (j < ts.size() && (model_.marks[j] & kMarkGenericArgs)) ++j;
    if (j >= ts.size() || !ts[j].is_punct("(")) return;
    int paren = 0;
    while (j < ts.size()) {
      if (ts[j].is_punct("("))
        ++paren;
      else if (ts[j].is_punct(")")) {
        --paren;
        if (paren == 0) {
          ++j;
          break;
        }
      }
      ++j;
    }
    if (j >= ts.size() || !ts[j].is_punct("{")) return;
    TypeDecl site;
    site.is_anonymous = true;
    site.kind = TypeKind::class_;
    site.nesting_depth = depth + 1;
    site.parent = type_index;
    site.declared_line = site_line;
    site.body_begin = site.body_end = j + 1;
    model_.types.push_back(std::move(site));
  }

  TypeRef parse_type_ref() {
    TypeRef ref;
    if (at_end()) return ref;
    if (is_primitive_or_void(cur())) {
      ref.base = cur().text;
      ref.valid = true;
      advance();
    } else if (cur().kind == TokenKind::identifier) {
      ref.base = cur().text;
      ref.valid = true;
      advance();
      while (!at_end() && cur().is_punct(".") && peek(1).kind == TokenKind::identifier) {
        ref.qualified = true;
        advance();
        ref.base = cur().text;
        advance();
      }
    } else {
      return ref;
    }
    if (marked_generic()) {
      ref.generic = true;
      skip_generic_args();
    }
    while (!at_end() && cur().is_punct("[") && peek(1).is_punct("]")) {
      advance();
      advance();
    }
    return ref;
  }

  void skip_initializer(int type_index, int depth) {
    int paren = 0, bracket = 0, brace = 0;
    while (!at_end()) {
      const Token& t = cur();
      if (paren == 0 && bracket == 0 && brace == 0 &&
          (t.is_punct(",") || t.is_punct(";")))
        return;
      if (t.is_punct("}") && brace == 0) return;  // malformed; let caller see it
      if (t.is_punct("("))
        ++paren;
      else if (t.is_punct(")"))
        --paren;
      else if (t.is_punct("["))
        ++bracket;
      else if (t.is_punct("]"))
        --bracket;
      else if (t.is_punct("{"))
        ++brace;
      else if (t.is_punct("}"))
        --brace;
      else if (t.is_keyword("new"))
        note_anonymous_site(type_index, depth);
      advance();
    }
  }

  SourceModel model_;
  std::size_t pos_ = 0;
};

}  // namespace

SourceModel parse_structure(TokenStream tokens, std::vector<std::string> diagnostics) {
  return StructureParser(std::move(tokens), std::move(diagnostics)).run();
}

SourceModel parse_structure(const std::string& source) {
  std::vector<std::string> diagnostics;
  TokenStream tokens = lex_lenient(source, diagnostics);
  return parse_structure(std::move(tokens), std::move(diagnostics));
}

}  // namespace migrank::metrics
