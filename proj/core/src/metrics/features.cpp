#include "migrank/metrics/features.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "migrank/metrics/structure_parser.hpp"

namespace migrank::metrics {

namespace {

const std::unordered_set<std::string>& primitive_names() {
  static const std::unordered_set<std::string> prims = {
      "void", "int", "long", "short", "byte", "char", "float", "double", "boolean"};
  return prims;
}

const std::unordered_set<std::string>& log_receivers() {
  static const std::unordered_set<std::string> names = {"Log", "log", "logger",
                                                        "LOGGER", "Timber"};
  return names;
}

bool has_modifier(const std::vector<std::string>& mods, const char* which) {
  return std::find(mods.begin(), mods.end(), which) != mods.end();
}

bool has_access_modifier(const std::vector<std::string>& mods) {
  return has_modifier(mods, "public") || has_modifier(mods, "private") ||
         has_modifier(mods, "protected");
}

std::string import_simple_name(const std::string& qualified) {
  auto dot = qualified.find_last_of('.');
  return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

bool path_has_segment(const std::string& path, const char* segment) {
  std::size_t start = 0;
  while (start <= path.size()) {
    auto slash = path.find('/', start);
    if (slash == std::string::npos) slash = path.size();
    if (path.compare(start, slash - start, segment) == 0) return true;
    start = slash + 1;
  }
  return false;
}

struct Invocation {
  std::string receiver;  // empty for bare and this/super/chained calls
  std::string name;
  bool from_method_body = false;
};

struct FieldAccessStats {
  int count = 0;
  int sync_count = 0;
};

// Everything gathered about one named type before features are assembled.
struct TypeFacts {
  std::size_t type_index = 0;
  std::set<std::string> decl_refs;  // extends/implements, field/param/return types
  std::set<std::string> body_refs;  // object creations and catch types
  std::set<std::string> invoked_keys;  // "receiver.name" or "name", bodies only
  std::vector<Invocation> invocations;
  std::vector<std::set<std::string>> fields_per_method;  // aligned with methods
  std::map<std::string, FieldAccessStats> field_access;
  long long wmc = 0;
  int max_nested = 0;
  long long variables = 0;
  int dit = 1;
  const std::string* android_feature = nullptr;  // catalog feature the chain hits
  double tcc = 0, lcc = 0;
  long long lcom = 0;
};

class FileExtractor {
 public:
  FileExtractor(const std::string& path, const SourceModel& model,
                const ProjectSnapshot& snapshot)
      : path_(path), model_(model), snapshot_(snapshot) {}

  FeatureVector run() {
    index_file();
    for (std::size_t i = 0; i < model_.types.size(); ++i) {
      if (!model_.types[i].is_anonymous) facts_.emplace(i, scan_type(i));
    }
    assemble();
    return fv_;
  }

 private:
  bool generic_at(std::size_t idx) const {
    return (model_.marks[idx] & kMarkGenericArgs) != 0;
  }

  void index_file() {
    for (const TypeDecl& t : model_.types)
      if (!t.is_anonymous) local_types_.emplace(t.name, t.extends_name);
    for (const std::string& imp : model_.imports) {
      std::string simple = import_simple_name(imp);
      if (simple != "*") import_simples_.insert(simple);
      if (imp.rfind("android.", 0) == 0 || imp.rfind("androidx.", 0) == 0)
        android_import_simples_.insert(simple);
    }
  }

  bool known_class(const std::string& name) const {
    return local_types_.count(name) > 0 || snapshot_.knows_type(name) ||
           import_simples_.count(name) > 0;
  }

  bool android_coupled(const std::string& name) const {
    return snapshot_.catalog().contains(name) || android_import_simples_.count(name) > 0;
  }

  // Superclass of a simple name, searching this file first, then the
  // snapshot; nullptr when unresolvable.
  const std::string* resolve_extends(const std::string& name) const {
    auto it = local_types_.find(name);
    if (it != local_types_.end()) return &it->second;
    return snapshot_.extends_of(name);
  }

  TypeFacts scan_type(std::size_t index) {
    const TypeDecl& type = model_.types[index];
    TypeFacts facts;
    facts.type_index = index;

    if (!type.extends_name.empty()) facts.decl_refs.insert(type.extends_name);
    for (const std::string& n : type.implements_names) facts.decl_refs.insert(n);
    for (const FieldDecl& f : type.fields) {
      facts.decl_refs.insert(f.type_name);
      if (f.init_begin < f.init_end) scan_expression_range(f.init_begin, f.init_end, facts);
    }
    std::set<std::string> own_fields;
    for (const FieldDecl& f : type.fields) own_fields.insert(f.name);

    for (const MethodDecl& m : type.methods) {
      if (!m.return_type.empty()) facts.decl_refs.insert(m.return_type);
      for (const std::string& p : m.parameter_types) facts.decl_refs.insert(p);
      facts.fields_per_method.push_back(scan_method_body(m, own_fields, facts));
    }

    facts.dit = hierarchy_depth(type);
    facts.android_feature = android_feature(type);
    cohesion(type, facts);
    return facts;
  }

  // Walks one method body collecting complexity, nesting, field accesses
  // (with synchronized context), invocations, creations and catch types.
  std::set<std::string> scan_method_body(const MethodDecl& m,
                                         const std::set<std::string>& own_fields,
                                         TypeFacts& facts) {
    std::set<std::string> accessed;
    if (!m.has_body) {
      facts.wmc += 1;
      return accessed;
    }
    const TokenStream& ts = model_.tokens;
    bool method_sync = has_modifier(m.modifiers, "synchronized");
    long long wmc = 1;
    int depth = 0, max_depth = 0;
    std::vector<int> sync_opens;
    bool pending_sync = false;

    for (std::size_t idx = m.body_begin; idx < m.body_end; ++idx) {
      const Token& t = ts[idx];
      if (t.is_punct("{")) {
        ++depth;
        if (pending_sync) {
          sync_opens.push_back(depth);
          pending_sync = false;
        }
        max_depth = std::max(max_depth, depth);
        continue;
      }
      if (t.is_punct("}")) {
        if (!sync_opens.empty() && sync_opens.back() == depth) sync_opens.pop_back();
        --depth;
        continue;
      }
      if (t.kind == TokenKind::keyword) {
        const std::string& k = t.text;
        if (k == "if" || k == "for" || k == "while" || k == "do" || k == "case" ||
            k == "catch")
          ++wmc;
        if (k == "synchronized") pending_sync = true;
        if (k == "catch") collect_catch_types(idx, m.body_end, facts);
        if (k == "new") collect_creation(idx, m.body_end, facts);
        continue;
      }
      if (t.kind == TokenKind::operator_) {
        if (t.text == "&&" || t.text == "||" || (t.text == "?" && !generic_at(idx)))
          ++wmc;
        continue;
      }
      if (t.kind != TokenKind::identifier || generic_at(idx)) continue;

      const Token& prev = ts[idx - 1];
      bool calls = idx + 1 < m.body_end && ts[idx + 1].is_punct("(");
      if (calls) {
        if (prev.is_keyword("new")) continue;
        Invocation inv;
        inv.name = t.text;
        inv.from_method_body = true;
        if (prev.is_punct(".") && idx >= 2 && ts[idx - 2].kind == TokenKind::identifier)
          inv.receiver = ts[idx - 2].text;
        facts.invoked_keys.insert(inv.receiver.empty() ? inv.name
                                                       : inv.receiver + "." + inv.name);
        facts.invocations.push_back(std::move(inv));
        continue;
      }
      if (own_fields.count(t.text)) {
        bool dotted = prev.is_punct(".");
        bool via_this = dotted && idx >= 2 && ts[idx - 2].is_keyword("this");
        if (!dotted || via_this) {
          accessed.insert(t.text);
          FieldAccessStats& stats = facts.field_access[t.text];
          ++stats.count;
          if (method_sync || !sync_opens.empty()) ++stats.sync_count;
        }
      }
    }
    facts.wmc += wmc;
    facts.max_nested = std::max(facts.max_nested, max_depth);
    facts.variables += count_local_declarations(m.body_begin, m.body_end);
    return accessed;
  }

  // Field initializers: only invocation-flavoured facts are collected here;
  // plain lexical tokens are already covered by the type's range counters.
  void scan_expression_range(std::size_t begin, std::size_t end, TypeFacts& facts) {
    const TokenStream& ts = model_.tokens;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Token& t = ts[idx];
      if (t.is_keyword("new")) {
        collect_creation(idx, end, facts);
        continue;
      }
      if (t.kind != TokenKind::identifier || generic_at(idx) || idx == 0) continue;
      if (idx + 1 < end && ts[idx + 1].is_punct("(") && !ts[idx - 1].is_keyword("new")) {
        Invocation inv;
        inv.name = t.text;
        if (ts[idx - 1].is_punct(".") && idx >= 2 &&
            ts[idx - 2].kind == TokenKind::identifier)
          inv.receiver = ts[idx - 2].text;
        facts.invocations.push_back(std::move(inv));
      }
    }
  }

  void collect_creation(std::size_t new_idx, std::size_t end, TypeFacts& facts) {
    const TokenStream& ts = model_.tokens;
    std::size_t j = new_idx + 1;
    if (j >= end || ts[j].kind != TokenKind::identifier) return;
    std::string base = ts[j].text;
    ++j;
    while (j + 1 < end && ts[j].is_punct(".") && ts[j + 1].kind == TokenKind::identifier) {
      base = ts[j + 1].text;
      j += 2;
    }
    facts.body_refs.insert(std::move(base));
  }

  void collect_catch_types(std::size_t catch_idx, std::size_t end, TypeFacts& facts) {
    const TokenStream& ts = model_.tokens;
    std::size_t j = catch_idx + 1;
    if (j >= end || !ts[j].is_punct("(")) return;
    ++j;
    for (; j < end && !ts[j].is_punct(")"); ++j) {
      if (ts[j].kind != TokenKind::identifier) continue;
      if (j + 1 < end &&
          (ts[j + 1].kind == TokenKind::identifier || ts[j + 1].is_op("|")))
        facts.body_refs.insert(ts[j].text);
    }
  }

  // Counts local-variable declaration statements: at a statement boundary,
  // an optional "final", a type reference, a declarator name and then
  // '=', ';' or ','. A multi-declarator statement counts once.
  long long count_local_declarations(std::size_t begin, std::size_t end) const {
    const TokenStream& ts = model_.tokens;
    long long count = 0;
    for (std::size_t idx = begin; idx < end; ++idx) {
      bool at_statement = idx == begin || ts[idx - 1].is_punct(";") ||
                          ts[idx - 1].is_punct("{") || ts[idx - 1].is_punct("}");
      if (!at_statement) continue;
      if (match_local_declaration(idx, end)) ++count;
    }
    return count;
  }

  bool match_local_declaration(std::size_t p, std::size_t end) const {
    const TokenStream& ts = model_.tokens;
    if (p < end && ts[p].is_keyword("final")) ++p;
    if (p >= end) return false;
    if (ts[p].kind == TokenKind::keyword) {
      if (!primitive_names().count(ts[p].text) || ts[p].text == "void") return false;
      ++p;
    } else if (ts[p].kind == TokenKind::identifier && !generic_at(p)) {
      ++p;
      while (p + 1 < end && ts[p].is_punct(".") && ts[p + 1].kind == TokenKind::identifier)
        p += 2;
    } else {
      return false;
    }
    while (p < end && generic_at(p)) ++p;
    while (p + 1 < end && ts[p].is_punct("[") && ts[p + 1].is_punct("]")) p += 2;
    if (p >= end || ts[p].kind != TokenKind::identifier || generic_at(p)) return false;
    ++p;
    while (p + 1 < end && ts[p].is_punct("[") && ts[p + 1].is_punct("]")) p += 2;
    if (p >= end) return false;
    return ts[p].is_op("=") || ts[p].is_punct(";") || ts[p].is_punct(",");
  }

  int hierarchy_depth(const TypeDecl& type) const {
    int depth = 1;
    std::set<std::string> visited = {type.name};
    std::string current = type.extends_name;
    while (!current.empty() && !visited.count(current)) {
      visited.insert(current);
      if (snapshot_.catalog().contains(current)) {
        ++depth;
        break;
      }
      const std::string* next = resolve_extends(current);
      if (!next) break;
      ++depth;
      current = *next;
    }
    return depth;
  }

  const std::string* android_feature(const TypeDecl& type) const {
    std::set<std::string> visited = {type.name};
    std::string current = type.extends_name;
    while (!current.empty() && !visited.count(current)) {
      visited.insert(current);
      if (const std::string* feature = snapshot_.catalog().feature_of(current))
        return feature;
      const std::string* next = resolve_extends(current);
      if (!next) break;
      current = *next;
    }
    return nullptr;
  }

  void cohesion(const TypeDecl& type, TypeFacts& facts) const {
    const auto& per_method = facts.fields_per_method;
    std::size_t n_all = per_method.size();
    long long p = 0, q = 0;
    for (std::size_t a = 0; a < n_all; ++a) {
      for (std::size_t b = a + 1; b < n_all; ++b) {
        bool share = false;
        for (const std::string& f : per_method[a])
          if (per_method[b].count(f)) {
            share = true;
            break;
          }
        share ? ++q : ++p;
      }
    }
    facts.lcom = std::max(0LL, p - q);

    // Visible methods only for the connectivity ratios.
    std::vector<std::size_t> visible;
    for (std::size_t i = 0; i < type.methods.size(); ++i) {
      const MethodDecl& m = type.methods[i];
      if (!m.is_constructor && !has_modifier(m.modifiers, "private")) visible.push_back(i);
    }
    std::size_t n = visible.size();
    if (n < 2) return;
    double possible = static_cast<double>(n) * (n - 1) / 2.0;
    long long direct = 0;
    std::vector<std::size_t> component(n);
    for (std::size_t i = 0; i < n; ++i) component[i] = i;
    auto root = [&](std::size_t x) {
      while (component[x] != x) x = component[x] = component[component[x]];
      return x;
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        bool share = false;
        for (const std::string& f : per_method[visible[a]])
          if (per_method[visible[b]].count(f)) {
            share = true;
            break;
          }
        if (share) {
          ++direct;
          component[root(a)] = root(b);
        }
      }
    }
    long long connected = 0;
    std::map<std::size_t, long long> sizes;
    for (std::size_t i = 0; i < n; ++i) ++sizes[root(i)];
    for (const auto& [r, size] : sizes) connected += size * (size - 1) / 2;
    facts.tcc = direct / possible;
    facts.lcc = connected / possible;
  }

  // --- assembly ------------------------------------------------------------

  int top_ancestor(int index) const {
    while (model_.types[index].parent >= 0) index = model_.types[index].parent;
    return index;
  }

  struct LexicalCounts {
    long long loops = 0, assignments = 0, comparisons = 0, strings = 0, maths = 0,
              numbers = 0, lambdas = 0, parens = 0, returns = 0, trys = 0;
    std::set<std::string> words;
  };

  LexicalCounts lexical_counts(std::size_t begin, std::size_t end) const {
    static const std::unordered_set<std::string> kAssignOps = {
        "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};
    static const std::unordered_set<std::string> kParenHeads = {
        "if", "for", "while", "switch", "catch", "this", "super", "try",
        "synchronized"};
    const TokenStream& ts = model_.tokens;
    LexicalCounts out;
    for (std::size_t idx = begin; idx < end && idx < ts.size(); ++idx) {
      const Token& t = ts[idx];
      switch (t.kind) {
        case TokenKind::identifier:
          out.words.insert(t.text);
          break;
        case TokenKind::string_literal:
          ++out.strings;
          break;
        case TokenKind::number_literal:
          ++out.numbers;
          break;
        case TokenKind::keyword:
          if (t.text == "for" || t.text == "while" || t.text == "do") ++out.loops;
          if (t.text == "return") ++out.returns;
          if (t.text == "try") ++out.trys;
          break;
        case TokenKind::operator_: {
          const std::string& op = t.text;
          if (kAssignOps.count(op)) {
            ++out.assignments;
          } else if (op == "==" || op == "!=") {
            ++out.comparisons;
          } else if ((op == "<" || op == ">" || op == "<=" || op == ">=") &&
                     !generic_at(idx)) {
            ++out.comparisons;
          } else if (op == "->" && !(model_.marks[idx] & kMarkSwitchArrow)) {
            ++out.lambdas;
          } else if (op == "+" || op == "-" || op == "*" || op == "/" || op == "%") {
            if (idx > 0) {
              const Token& prev = ts[idx - 1];
              bool binary = prev.kind == TokenKind::identifier ||
                            prev.kind == TokenKind::number_literal ||
                            prev.kind == TokenKind::string_literal ||
                            prev.kind == TokenKind::char_literal ||
                            prev.is_punct(")") || prev.is_punct("]");
              if (binary) ++out.maths;
            }
          }
          break;
        }
        case TokenKind::punctuation:
          if (t.text == "(" && idx > 0) {
            const Token& prev = ts[idx - 1];
            bool header = prev.kind == TokenKind::identifier ||
                          prev.kind == TokenKind::annotation ||
                          (prev.kind == TokenKind::keyword && kParenHeads.count(prev.text)) ||
                          generic_at(idx - 1);
            if (!header) ++out.parens;
          }
          break;
        default:
          break;
      }
    }
    return out;
  }

  void assemble() {
    const std::vector<TypeDecl>& types = model_.types;

    // Lexical ranges: one per top-level named type, or the whole file when
    // nothing parsed as a type.
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (const TypeDecl& t : types)
      if (!t.is_anonymous && t.nesting_depth == 0)
        ranges.emplace_back(t.decl_begin, std::min(t.body_end + 1, model_.tokens.size()));
    if (ranges.empty() && !model_.tokens.empty())
      ranges.emplace_back(0, model_.tokens.size());

    for (const auto& [b, e] : ranges) {
      LexicalCounts lex = lexical_counts(b, e);
      fv_.loops += lex.loops;
      fv_.assignments += lex.assignments;
      fv_.comparisons += lex.comparisons;
      fv_.string_literals += lex.strings;
      fv_.math_operations += lex.maths;
      fv_.numbers += lex.numbers;
      fv_.lambdas += lex.lambdas;
      fv_.parenthesized_expressions += lex.parens;
      fv_.returns += lex.returns;
      fv_.try_catches += lex.trys;
      fv_.unique_words += static_cast<double>(lex.words.size());
    }

    std::set<int> token_lines;
    for (const Token& t : model_.tokens) token_lines.insert(t.line);
    fv_.sloc = static_cast<double>(token_lines.size());

    // Structural facts, by top-level group for the reference-set features.
    std::map<int, std::set<std::string>> group_refs;
    std::map<int, std::set<std::string>> group_invoked;
    std::map<int, long long> group_methods;
    double tcc_sum = 0, lcc_sum = 0;
    std::size_t named_count = 0;

    for (auto& [index, facts] : facts_) {
      const TypeDecl& type = types[index];
      int group = top_ancestor(static_cast<int>(index));
      ++named_count;

      fv_.methods += static_cast<double>(type.methods.size());
      fv_.fields += static_cast<double>(type.fields.size());
      group_methods[group] += static_cast<long long>(type.methods.size());

      for (const MethodDecl& m : type.methods) {
        bool pub = has_modifier(m.modifiers, "public");
        bool priv = has_modifier(m.modifiers, "private");
        bool prot = has_modifier(m.modifiers, "protected");
        fv_.public_methods += pub;
        fv_.private_methods += priv;
        fv_.protected_methods += prot;
        fv_.default_methods += !pub && !priv && !prot;
        fv_.final_methods += has_modifier(m.modifiers, "final");
        fv_.static_methods += has_modifier(m.modifiers, "static");
        fv_.abstract_methods += has_modifier(m.modifiers, "abstract");
        fv_.synchronized_methods += has_modifier(m.modifiers, "synchronized");

        long long coupled_params = 0;
        for (const std::string& p : m.parameter_types)
          if (android_coupled(p)) ++coupled_params;
        bool coupled_return = !m.return_type.empty() && android_coupled(m.return_type);
        fv_.parameters_coupled += static_cast<double>(coupled_params);
        fv_.returns_coupled += coupled_return;
        fv_.methods_coupled += coupled_params > 0 || coupled_return;
      }
      for (const FieldDecl& f : type.fields) {
        bool pub = has_modifier(f.modifiers, "public");
        bool priv = has_modifier(f.modifiers, "private");
        bool prot = has_modifier(f.modifiers, "protected");
        fv_.public_fields += pub;
        fv_.private_fields += priv;
        fv_.protected_fields += prot;
        fv_.default_fields += !pub && !priv && !prot;
        fv_.final_fields += has_modifier(f.modifiers, "final");
        fv_.static_fields += has_modifier(f.modifiers, "static");
      }

      fv_.wmc += static_cast<double>(facts.wmc);
      fv_.max_nested_blocks = std::max(fv_.max_nested_blocks,
                                       static_cast<double>(facts.max_nested));
      fv_.variables += static_cast<double>(facts.variables);
      fv_.lcom += static_cast<double>(facts.lcom);
      tcc_sum += facts.tcc;
      lcc_sum += facts.lcc;
      fv_.dit = std::max(fv_.dit, static_cast<double>(facts.dit));

      for (const std::string& r : facts.decl_refs) group_refs[group].insert(r);
      for (const std::string& r : facts.body_refs) group_refs[group].insert(r);
      for (const std::string& k : facts.invoked_keys) group_invoked[group].insert(k);

      for (const Invocation& inv : facts.invocations) {
        if (!inv.receiver.empty() && known_class(inv.receiver)) fv_.nosi += 1;
        if ((!inv.receiver.empty() && log_receivers().count(inv.receiver)) ||
            inv.name == "println" || inv.name == "printStackTrace")
          fv_.log_statements += 1;
      }

      for (const FieldDecl& f : type.fields) {
        if (has_modifier(f.modifiers, "volatile")) continue;
        auto it = facts.field_access.find(f.name);
        if (it == facts.field_access.end() || it->second.count == 0) continue;
        if (it->second.sync_count == it->second.count) fv_.synchronized_fields += 1;
      }

      if (facts.android_feature) {
        const std::string& feature = *facts.android_feature;
        fv_.is_in_android_hierarchy = 1;
        if (feature == "activity") fv_.is_activity = 1;
        if (feature == "view") fv_.is_view = 1;
        if (feature == "receiver") fv_.is_broadcast_receiver = 1;
        if (feature == "service") fv_.is_service = 1;
        if (feature == "provider") fv_.is_content_provider = 1;
        if (feature == "fragment") fv_.is_fragment = 1;
      }

      if (type.nesting_depth == 0 && is_pojo_type(type)) fv_.is_pojo = 1;
    }

    for (const TypeDecl& t : types) {
      if (t.is_anonymous)
        fv_.anonymous_classes += 1;
      else if (t.nesting_depth >= 1)
        fv_.inner_classes += 1;
    }

    for (const auto& [group, refs] : group_refs) {
      long long distinct = 0;
      for (const std::string& r : refs) {
        if (primitive_names().count(r) || r == "var") continue;
        if (r == "String" || r == "Object") continue;
        if (local_types_.count(r)) continue;
        ++distinct;
      }
      fv_.cbo += static_cast<double>(distinct);
    }
    for (const auto& [group, methods] : group_methods)
      fv_.rfc += static_cast<double>(methods) +
                 static_cast<double>(group_invoked[group].size());

    if (named_count > 0) {
      fv_.tcc = tcc_sum / static_cast<double>(named_count);
      fv_.lcc = lcc_sum / static_cast<double>(named_count);
    }

    fv_.is_building_block = fv_.is_activity || fv_.is_service ||
                            fv_.is_broadcast_receiver || fv_.is_content_provider;
    fv_.has_android_coupling = fv_.methods_coupled > 0;
    fv_.is_test = compute_is_test();
  }

  bool is_pojo_type(const TypeDecl& type) const {
    if (type.kind != TypeKind::class_) return false;
    if (!type.extends_name.empty()) return false;
    if (type.fields.empty()) return false;
    for (const FieldDecl& f : type.fields)
      if (has_modifier(f.modifiers, "public")) return false;
    for (const MethodDecl& m : type.methods) {
      if (m.is_constructor) continue;
      const std::string& n = m.name;
      bool getter = ((n.rfind("get", 0) == 0 && n.size() > 3) ||
                     (n.rfind("is", 0) == 0 && n.size() > 2)) &&
                    m.parameter_types.empty();
      bool setter = n.rfind("set", 0) == 0 && n.size() > 3 &&
                    m.parameter_types.size() == 1;
      bool standard = n == "equals" || n == "hashCode" || n == "toString";
      if (!getter && !setter && !standard) return false;
    }
    return true;
  }

  bool compute_is_test() const {
    if (path_has_segment(path_, "test") || path_has_segment(path_, "androidTest"))
      return true;
    for (const std::string& imp : model_.imports)
      if (imp.rfind("org.junit", 0) == 0 || imp.rfind("junit.", 0) == 0 ||
          imp.rfind("androidx.test", 0) == 0)
        return true;
    for (const TypeDecl& t : model_.types)
      if (!t.is_anonymous && t.nesting_depth == 0 && t.name.ends_with("Test"))
        return true;
    return false;
  }

  const std::string& path_;
  const SourceModel& model_;
  const ProjectSnapshot& snapshot_;
  std::map<std::size_t, TypeFacts> facts_;
  std::map<std::string, std::string> local_types_;  // name -> extends
  std::set<std::string> import_simples_;
  std::set<std::string> android_import_simples_;
  FeatureVector fv_;
};

}  // namespace

ProjectSnapshot::ProjectSnapshot(std::vector<SnapshotFile> files, AndroidCatalog catalog)
    : catalog_(std::move(catalog)) {
  std::sort(files.begin(), files.end(),
            [](const SnapshotFile& a, const SnapshotFile& b) { return a.path < b.path; });
  models_.reserve(files.size());
  for (SnapshotFile& f : files) {
    by_path_.emplace(f.path, paths_.size());
    paths_.push_back(f.path);
    models_.push_back(parse_structure(f.source));
  }
  for (std::size_t i = 0; i < models_.size(); ++i)
    for (const TypeDecl& t : models_[i].types)
      if (!t.is_anonymous) extends_by_type_.emplace(t.name, t.extends_name);
}

const std::string* ProjectSnapshot::extends_of(const std::string& simple_name) const {
  auto it = extends_by_type_.find(simple_name);
  return it == extends_by_type_.end() ? nullptr : &it->second;
}

ExtractionResult ProjectSnapshot::extract(const std::string& path) const {
  auto it = by_path_.find(path);
  if (it == by_path_.end()) throw std::out_of_range("file not in snapshot: " + path);
  return extract_features_detailed(path, models_[it->second], *this);
}

ExtractionResult extract_features_detailed(const std::string& path,
                                           const SourceModel& model,
                                           const ProjectSnapshot& snapshot) {
  ExtractionResult result;
  result.features = FileExtractor(path, model, snapshot).run();
  result.diagnostics = model.diagnostics;
  return result;
}

ExtractionResult extract_features_detailed(const std::string& path,
                                           const std::string& source,
                                           const ProjectSnapshot& snapshot) {
  SourceModel model = parse_structure(source);
  return extract_features_detailed(path, model, snapshot);
}

FeatureVector extract_features(const std::string& path, const std::string& source,
                               const ProjectSnapshot& snapshot) {
  return extract_features_detailed(path, source, snapshot).features;
}

}  // namespace migrank::metrics
