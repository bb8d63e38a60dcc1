#include "scene2pddl/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

namespace scene2pddl {

std::string format_issue(const Issue& issue, const std::string& file) {
  std::ostringstream os;
  os << (file.empty() ? "<input>" : file) << ':' << issue.loc.line << ':' << issue.loc.col
     << ": " << (issue.severity == Severity::kError ? "error" : "warning") << ' '
     << issue.code << ' ' << issue.message;
  return os.str();
}

}  // namespace scene2pddl

namespace scene2pddl::pddl {
namespace {

bool is_symbol_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (std::isalnum(u)) return true;
  switch (c) {
    case '-': case '_': case '?': case ':': case '=': case '.':
    case '*': case '/': case '+': case '<': case '>': case '!':
      return true;
    default:
      return false;
  }
}

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// ---------------------------------------------------------------------------
// S-expression layer

struct Sexp {
  bool is_list = false;
  std::string sym;  // lowercased
  std::vector<Sexp> items;
  SourceLoc loc;
};

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  SourceLoc loc() const { return {line, col}; }

  void advance() {
    if (pos < text.size() && text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_blanks_and_comments() {
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == ';') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool eof() {
    skip_blanks_and_comments();
    return pos >= text.size();
  }
};

Result<Sexp> read_form(Lexer& lex, int depth) {
  if (depth > 512) {
    return fail<Sexp>("LEX_ERROR", "nesting too deep", lex.loc());
  }
  lex.skip_blanks_and_comments();
  if (lex.pos >= lex.text.size()) {
    return fail<Sexp>("LEX_ERROR", "unexpected end of input", lex.loc());
  }
  const char c = lex.text[lex.pos];
  const SourceLoc at = lex.loc();
  if (c == '(') {
    lex.advance();
    Sexp list;
    list.is_list = true;
    list.loc = at;
    while (true) {
      lex.skip_blanks_and_comments();
      if (lex.pos >= lex.text.size()) {
        return fail<Sexp>("LEX_ERROR", "unbalanced parentheses: missing ')'", at);
      }
      if (lex.text[lex.pos] == ')') {
        lex.advance();
        return list;
      }
      auto item = read_form(lex, depth + 1);
      if (!item.ok()) return item;
      list.items.push_back(item.take());
    }
  }
  if (c == ')') {
    return fail<Sexp>("LEX_ERROR", "unbalanced parentheses: unexpected ')'", at);
  }
  if (!is_symbol_char(c)) {
    return fail<Sexp>("LEX_ERROR",
                      "bad token: unexpected character 0x" +
                          [&] {
                            char buf[3];
                            std::snprintf(buf, sizeof buf, "%02x", static_cast<unsigned char>(c));
                            return std::string(buf);
                          }(),
                      at);
  }
  Sexp atom;
  atom.loc = at;
  std::string raw;
  while (lex.pos < lex.text.size() && is_symbol_char(lex.text[lex.pos])) {
    raw.push_back(lex.text[lex.pos]);
    lex.advance();
  }
  atom.sym = lowercase(raw);
  return atom;
}

const Sexp* list_head_is(const Sexp& form, const std::string& keyword) {
  if (!form.is_list || form.items.empty()) return nullptr;
  const Sexp& head = form.items.front();
  if (head.is_list || head.sym != keyword) return nullptr;
  return &form;
}

// Parses "n1 n2 - t1 n3 - t2 n4" segments; untyped names get `object`.
Result<std::vector<TypedName>> parse_typed_list(const std::vector<Sexp>& items,
                                                std::size_t begin, SourceLoc section_loc) {
  std::vector<TypedName> out;
  std::vector<TypedName> pending;
  for (std::size_t i = begin; i < items.size(); ++i) {
    const Sexp& it = items[i];
    if (it.is_list) {
      return fail<std::vector<TypedName>>("STRUCT_ERROR", "expected name, found list", it.loc);
    }
    if (it.sym == "-") {
      if (i + 1 >= items.size() || items[i + 1].is_list) {
        return fail<std::vector<TypedName>>("STRUCT_ERROR", "missing type after '-'",
                                            it.loc);
      }
      if (pending.empty()) {
        return fail<std::vector<TypedName>>("STRUCT_ERROR", "type with no names before '-'",
                                            it.loc);
      }
      const std::string& type = items[i + 1].sym;
      for (TypedName& n : pending) n.type = type;
      out.insert(out.end(), pending.begin(), pending.end());
      pending.clear();
      ++i;
      continue;
    }
    pending.push_back(TypedName{it.sym, "object", it.loc});
  }
  out.insert(out.end(), pending.begin(), pending.end());
  (void)section_loc;
  return out;
}

Result<LiftedAtom> parse_lifted_atom(const Sexp& form) {
  if (!form.is_list || form.items.empty()) {
    return fail<LiftedAtom>("STRUCT_ERROR", "expected atom", form.loc);
  }
  LiftedAtom atom;
  atom.loc = form.loc;
  if (form.items.front().is_list) {
    return fail<LiftedAtom>("STRUCT_ERROR", "predicate name must be a symbol", form.loc);
  }
  atom.pred = form.items.front().sym;
  for (std::size_t i = 1; i < form.items.size(); ++i) {
    if (form.items[i].is_list) {
      return fail<LiftedAtom>("STRUCT_ERROR", "atom arguments must be symbols",
                              form.items[i].loc);
    }
    atom.args.push_back(form.items[i].sym);
  }
  return atom;
}

// `(and lit...)`, a single literal, or `()` meaning an empty conjunction.
Result<std::vector<Sexp>> conjunction_members(const Sexp& form) {
  if (!form.is_list) {
    return fail<std::vector<Sexp>>("STRUCT_ERROR", "expected a condition", form.loc);
  }
  if (form.items.empty()) return std::vector<Sexp>{};
  if (!form.items.front().is_list && form.items.front().sym == "and") {
    return std::vector<Sexp>(form.items.begin() + 1, form.items.end());
  }
  return std::vector<Sexp>{form};
}

struct SchemaChecker {
  const PddlDomain& domain;
  std::vector<Issue>& issues;

  void check_literal(const LiftedAtom& atom, const ActionSchema& action) {
    const PredicateSchema* pred = domain.find_predicate(atom.pred);
    if (pred == nullptr) {
      issues.push_back({Severity::kError, "UNKNOWN_PREDICATE",
                        "action '" + action.name + "' uses undeclared predicate '" +
                            atom.pred + "'",
                        atom.loc});
      return;
    }
    if (pred->params.size() != atom.args.size()) {
      issues.push_back({Severity::kError, "ARITY_MISMATCH",
                        "predicate '" + atom.pred + "' expects " +
                            std::to_string(pred->params.size()) + " arguments, got " +
                            std::to_string(atom.args.size()),
                        atom.loc});
    }
    for (const std::string& arg : atom.args) {
      if (arg.starts_with('?')) {
        const bool declared = std::any_of(action.params.begin(), action.params.end(),
                                          [&](const TypedName& p) { return p.name == arg; });
        if (!declared) {
          issues.push_back({Severity::kError, "UNDECLARED_VARIABLE",
                            "variable '" + arg + "' is not a parameter of action '" +
                                action.name + "'",
                            atom.loc});
        }
      }
    }
  }
};

bool same_lifted(const LiftedAtom& a, const LiftedAtom& b) {
  return a.pred == b.pred && a.args == b.args;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string Atom::str() const {
  std::string s = "(" + pred;
  for (const std::string& a : args) {
    s += ' ';
    s += a;
  }
  s += ')';
  return s;
}

const PredicateSchema* PddlDomain::find_predicate(const std::string& pname) const {
  for (const PredicateSchema& p : predicates) {
    if (p.name == pname) return &p;
  }
  return nullptr;
}

const ActionSchema* PddlDomain::find_action(const std::string& aname) const {
  for (const ActionSchema& a : actions) {
    if (a.name == aname) return &a;
  }
  return nullptr;
}

bool PddlDomain::type_is_a(const std::string& sub, const std::string& super) const {
  if (sub == super || super == "object") return true;
  std::string cur = sub;
  for (std::size_t hops = 0; hops <= types.size(); ++hops) {
    const auto it = std::find_if(types.begin(), types.end(),
                                 [&](const TypedName& t) { return t.name == cur; });
    if (it == types.end()) return false;
    if (it->type == super) return true;
    cur = it->type;
    if (cur == "object") return false;
  }
  return false;
}

const std::string* PddlProblem::object_type(const std::string& oname) const {
  for (const TypedName& o : objects) {
    if (o.name == oname) return &o.type;
  }
  return nullptr;
}

void ValidationReport::add(Severity sev, std::string code, std::string message,
                           SourceLoc loc) {
  if (sev == Severity::kError) ok = false;
  issues.push_back({sev, std::move(code), std::move(message), loc});
}

std::string ValidationReport::str(const std::string& file) const {
  std::string out;
  for (const Issue& issue : issues) {
    out += format_issue(issue, file);
    out += '\n';
  }
  return out;
}

void insert_atom(std::vector<Atom>& set, Atom atom) {
  const auto it = std::lower_bound(set.begin(), set.end(), atom);
  if (it != set.end() && *it == atom) return;
  set.insert(it, std::move(atom));
}

bool contains_atom(const std::vector<Atom>& set, const Atom& atom) {
  const auto it = std::lower_bound(set.begin(), set.end(), atom);
  return it != set.end() && *it == atom;
}

// ---------------------------------------------------------------------------
// Domain parsing

Parsed<PddlDomain> parse_domain(const std::string& text) {
  Parsed<PddlDomain> out;
  Lexer lex(text);
  if (lex.eof()) {
    out.error = Error{"LEX_ERROR", "empty input", lex.loc()};
    return out;
  }
  auto form_r = read_form(lex, 0);
  if (!form_r.ok()) {
    out.error = form_r.error();
    return out;
  }
  const Sexp form = form_r.take();
  if (list_head_is(form, "define") == nullptr || form.items.size() < 2 ||
      list_head_is(form.items[1], "domain") == nullptr ||
      form.items[1].items.size() != 2 || form.items[1].items[1].is_list) {
    out.error = Error{"STRUCT_ERROR", "expected (define (domain <name>) ...)", form.loc};
    return out;
  }

  PddlDomain domain;
  domain.name = form.items[1].items[1].sym;

  for (std::size_t i = 2; i < form.items.size(); ++i) {
    const Sexp& section = form.items[i];
    if (!section.is_list || section.items.empty() || section.items.front().is_list) {
      out.error = Error{"STRUCT_ERROR", "expected a (:keyword ...) section", section.loc};
      return out;
    }
    const std::string& key = section.items.front().sym;
    if (key == ":requirements") {
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        if (section.items[j].is_list) {
          out.error = Error{"STRUCT_ERROR", "malformed :requirements", section.items[j].loc};
          return out;
        }
        domain.requirements.push_back(section.items[j].sym);
      }
    } else if (key == ":types") {
      auto typed = parse_typed_list(section.items, 1, section.loc);
      if (!typed.ok()) {
        out.error = typed.error();
        return out;
      }
      domain.types = typed.take();
    } else if (key == ":predicates") {
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        const Sexp& decl = section.items[j];
        if (!decl.is_list || decl.items.empty() || decl.items.front().is_list) {
          out.error = Error{"STRUCT_ERROR", "malformed predicate declaration", decl.loc};
          return out;
        }
        PredicateSchema schema;
        schema.name = decl.items.front().sym;
        schema.loc = decl.loc;
        auto params = parse_typed_list(decl.items, 1, decl.loc);
        if (!params.ok()) {
          out.error = params.error();
          return out;
        }
        schema.params = params.take();
        domain.predicates.push_back(std::move(schema));
      }
    } else if (key == ":action") {
      if (section.items.size() < 2 || section.items[1].is_list) {
        out.error = Error{"STRUCT_ERROR", "malformed action: missing name", section.loc};
        return out;
      }
      ActionSchema action;
      action.name = section.items[1].sym;
      action.loc = section.loc;
      std::size_t j = 2;
      while (j < section.items.size()) {
        if (section.items[j].is_list || !section.items[j].sym.starts_with(':')) {
          out.error = Error{"STRUCT_ERROR",
                            "malformed action '" + action.name + "': expected :keyword",
                            section.items[j].loc};
          return out;
        }
        const std::string& akey = section.items[j].sym;
        if (j + 1 >= section.items.size()) {
          out.error = Error{"STRUCT_ERROR", "missing value after " + akey, section.items[j].loc};
          return out;
        }
        const Sexp& value = section.items[j + 1];
        if (akey == ":parameters") {
          if (!value.is_list) {
            out.error = Error{"STRUCT_ERROR", ":parameters must be a list", value.loc};
            return out;
          }
          auto params = parse_typed_list(value.items, 0, value.loc);
          if (!params.ok()) {
            out.error = params.error();
            return out;
          }
          action.params = params.take();
        } else if (akey == ":precondition") {
          auto members = conjunction_members(value);
          if (!members.ok()) {
            out.error = members.error();
            return out;
          }
          for (const Sexp& member : members.value()) {
            if (list_head_is(member, "not") != nullptr) {
              out.error = Error{"STRUCT_ERROR",
                                "negative preconditions are not supported in this subset",
                                member.loc};
              return out;
            }
            auto atom = parse_lifted_atom(member);
            if (!atom.ok()) {
              out.error = atom.error();
              return out;
            }
            action.preconditions.push_back(atom.take());
          }
        } else if (akey == ":effect") {
          auto members = conjunction_members(value);
          if (!members.ok()) {
            out.error = members.error();
            return out;
          }
          for (const Sexp& member : members.value()) {
            if (const Sexp* neg = list_head_is(member, "not")) {
              if (neg->items.size() != 2) {
                out.error = Error{"STRUCT_ERROR", "malformed (not ...) effect", member.loc};
                return out;
              }
              auto atom = parse_lifted_atom(neg->items[1]);
              if (!atom.ok()) {
                out.error = atom.error();
                return out;
              }
              action.del_effects.push_back(atom.take());
            } else {
              auto atom = parse_lifted_atom(member);
              if (!atom.ok()) {
                out.error = atom.error();
                return out;
              }
              action.add_effects.push_back(atom.take());
            }
          }
        } else {
          out.error = Error{"STRUCT_ERROR", "unsupported action keyword " + akey,
                            section.items[j].loc};
          return out;
        }
        j += 2;
      }
      domain.actions.push_back(std::move(action));
    } else {
      out.error = Error{"STRUCT_ERROR", "unsupported section " + key, section.loc};
      return out;
    }
  }

  // Structural validation: everything a planner needs to rely on downstream.
  std::vector<Issue> issues;
  std::set<std::string> declared_types{"object"};
  for (const TypedName& t : domain.types) declared_types.insert(t.name);
  for (const TypedName& t : domain.types) {
    if (!declared_types.contains(t.type)) {
      issues.push_back({Severity::kError, "UNKNOWN_TYPE",
                        "parent type '" + t.type + "' of '" + t.name + "' is not declared",
                        t.loc});
    }
  }
  std::set<std::string> pred_names;
  for (const PredicateSchema& p : domain.predicates) {
    if (!pred_names.insert(p.name).second) {
      issues.push_back({Severity::kError, "DUPLICATE_PREDICATE",
                        "predicate '" + p.name + "' declared twice", p.loc});
    }
    for (const TypedName& param : p.params) {
      if (!declared_types.contains(param.type)) {
        issues.push_back({Severity::kError, "UNKNOWN_TYPE",
                          "parameter type '" + param.type + "' of predicate '" + p.name +
                              "' is not declared",
                          param.loc});
      }
    }
  }
  std::set<std::string> action_names;
  SchemaChecker checker{domain, issues};
  for (const ActionSchema& a : domain.actions) {
    if (!action_names.insert(a.name).second) {
      issues.push_back({Severity::kError, "DUPLICATE_ACTION",
                        "action '" + a.name + "' declared twice", a.loc});
    }
    for (const TypedName& param : a.params) {
      if (!declared_types.contains(param.type)) {
        issues.push_back({Severity::kError, "UNKNOWN_TYPE",
                          "parameter type '" + param.type + "' of action '" + a.name +
                              "' is not declared",
                          param.loc});
      }
    }
    for (const LiftedAtom& lit : a.preconditions) checker.check_literal(lit, a);
    for (const LiftedAtom& lit : a.add_effects) checker.check_literal(lit, a);
    for (const LiftedAtom& lit : a.del_effects) checker.check_literal(lit, a);
    for (const LiftedAtom& add : a.add_effects) {
      for (const LiftedAtom& del : a.del_effects) {
        if (same_lifted(add, del)) {
          issues.push_back({Severity::kError, "CONFLICTING_EFFECT",
                            "action '" + a.name + "' both adds and deletes " + add.pred,
                            add.loc});
        }
      }
    }
  }
  for (const Issue& issue : issues) {
    if (issue.severity == Severity::kError) {
      out.error = Error{issue.code, issue.message, issue.loc};
      out.issues = std::move(issues);
      return out;
    }
  }
  out.issues = std::move(issues);
  out.value = std::move(domain);
  return out;
}

// ---------------------------------------------------------------------------
// Problem parsing

Parsed<PddlProblem> parse_problem(const std::string& text) {
  Parsed<PddlProblem> out;
  Lexer lex(text);
  if (lex.eof()) {
    out.error = Error{"LEX_ERROR", "empty input", lex.loc()};
    return out;
  }
  auto form_r = read_form(lex, 0);
  if (!form_r.ok()) {
    out.error = form_r.error();
    return out;
  }
  const Sexp form = form_r.take();
  if (list_head_is(form, "define") == nullptr || form.items.size() < 2 ||
      list_head_is(form.items[1], "problem") == nullptr ||
      form.items[1].items.size() != 2 || form.items[1].items[1].is_list) {
    out.error = Error{"STRUCT_ERROR", "expected (define (problem <name>) ...)", form.loc};
    return out;
  }

  PddlProblem problem;
  problem.name = form.items[1].items[1].sym;
  bool saw_domain = false;
  bool saw_init = false;
  bool saw_goal = false;

  for (std::size_t i = 2; i < form.items.size(); ++i) {
    const Sexp& section = form.items[i];
    if (!section.is_list || section.items.empty() || section.items.front().is_list) {
      out.error = Error{"STRUCT_ERROR", "expected a (:keyword ...) section", section.loc};
      return out;
    }
    const std::string& key = section.items.front().sym;
    if (key == ":domain") {
      if (section.items.size() != 2 || section.items[1].is_list) {
        out.error = Error{"STRUCT_ERROR", "malformed :domain section", section.loc};
        return out;
      }
      problem.domain_name = section.items[1].sym;
      saw_domain = true;
    } else if (key == ":objects") {
      auto objects = parse_typed_list(section.items, 1, section.loc);
      if (!objects.ok()) {
        out.error = objects.error();
        return out;
      }
      problem.objects = objects.take();
    } else if (key == ":init") {
      saw_init = true;
      for (std::size_t j = 1; j < section.items.size(); ++j) {
        auto lifted = parse_lifted_atom(section.items[j]);
        if (!lifted.ok()) {
          out.error = lifted.error();
          return out;
        }
        LiftedAtom l = lifted.take();
        for (const std::string& arg : l.args) {
          if (arg.starts_with('?')) {
            out.error = Error{"STRUCT_ERROR", "init atoms must be ground", l.loc};
            return out;
          }
        }
        Atom atom{l.pred, l.args, l.loc};
        if (contains_atom(problem.init, atom)) {
          out.issues.push_back({Severity::kWarning, "DUPLICATE_INIT_ATOM",
                                "duplicate init atom " + atom.str() + " collapsed", l.loc});
        } else {
          insert_atom(problem.init, std::move(atom));
        }
      }
    } else if (key == ":goal") {
      saw_goal = true;
      if (section.items.size() != 2) {
        out.error = Error{"STRUCT_ERROR", "malformed :goal section", section.loc};
        return out;
      }
      auto members = conjunction_members(section.items[1]);
      if (!members.ok()) {
        out.error = members.error();
        return out;
      }
      for (const Sexp& member : members.value()) {
        auto lifted = parse_lifted_atom(member);
        if (!lifted.ok()) {
          out.error = lifted.error();
          return out;
        }
        LiftedAtom l = lifted.take();
        for (const std::string& arg : l.args) {
          if (arg.starts_with('?')) {
            out.error = Error{"STRUCT_ERROR", "goal atoms must be ground", l.loc};
            return out;
          }
        }
        Atom atom{l.pred, l.args, l.loc};
        if (contains_atom(problem.goal, atom)) {
          out.issues.push_back({Severity::kWarning, "DUPLICATE_GOAL_ATOM",
                                "duplicate goal atom " + atom.str() + " collapsed", l.loc});
        } else {
          insert_atom(problem.goal, std::move(atom));
        }
      }
    } else {
      out.error = Error{"STRUCT_ERROR", "unsupported section " + key, section.loc};
      return out;
    }
  }

  if (!saw_domain) {
    out.error = Error{"STRUCT_ERROR", "missing :domain section", form.loc};
    return out;
  }
  if (!saw_init) {
    out.error = Error{"STRUCT_ERROR", "missing :init section", form.loc};
    return out;
  }
  if (!saw_goal) {
    out.error = Error{"STRUCT_ERROR", "missing :goal section", form.loc};
    return out;
  }
  if (problem.goal.empty()) {
    out.error = Error{"EMPTY_GOAL", "goal conjunction is empty", form.loc};
    return out;
  }

  std::sort(problem.objects.begin(), problem.objects.end());
  for (std::size_t i = 1; i < problem.objects.size(); ++i) {
    if (problem.objects[i].name == problem.objects[i - 1].name) {
      out.error = Error{"DUPLICATE_OBJECT",
                        "object '" + problem.objects[i].name + "' declared twice",
                        problem.objects[i].loc};
      return out;
    }
  }

  out.value = std::move(problem);
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void render_typed_names(std::ostringstream& os, const std::vector<TypedName>& names) {
  bool first = true;
  for (const TypedName& n : names) {
    if (!first) os << ' ';
    os << n.name << " - " << n.type;
    first = false;
  }
}

}  // namespace

std::string render_problem(const PddlProblem& p) {
  std::vector<TypedName> objects = p.objects;
  std::sort(objects.begin(), objects.end());
  std::vector<Atom> init = p.init;
  std::sort(init.begin(), init.end());
  std::vector<Atom> goal = p.goal;
  std::sort(goal.begin(), goal.end());

  std::ostringstream os;
  os << "(define (problem " << p.name << ")\n";
  os << "  (:domain " << p.domain_name << ")\n";
  os << "  (:objects ";
  render_typed_names(os, objects);
  os << ")\n";
  os << "  (:init ";
  for (std::size_t i = 0; i < init.size(); ++i) {
    if (i > 0) os << ' ';
    os << init[i].str();
  }
  os << ")\n";
  os << "  (:goal (and";
  for (const Atom& a : goal) os << ' ' << a.str();
  os << "))\n";
  os << ")\n";
  return os.str();
}

std::string render_domain(const PddlDomain& d) {
  std::ostringstream os;
  os << "(define (domain " << d.name << ")\n";
  if (!d.requirements.empty()) {
    os << "  (:requirements";
    for (const std::string& r : d.requirements) os << ' ' << r;
    os << ")\n";
  }
  if (!d.types.empty()) {
    os << "  (:types ";
    render_typed_names(os, d.types);
    os << ")\n";
  }
  os << "  (:predicates\n";
  for (const PredicateSchema& p : d.predicates) {
    os << "    (" << p.name;
    for (const TypedName& param : p.params) os << ' ' << param.name << " - " << param.type;
    os << ")\n";
  }
  os << "  )\n";
  auto render_lifted = [&](const std::vector<LiftedAtom>& atoms, bool negate) {
    for (const LiftedAtom& a : atoms) {
      os << ' ';
      if (negate) os << "(not ";
      os << '(' << a.pred;
      for (const std::string& arg : a.args) os << ' ' << arg;
      os << ')';
      if (negate) os << ')';
    }
  };
  for (const ActionSchema& a : d.actions) {
    os << "  (:action " << a.name << "\n    :parameters (";
    render_typed_names(os, a.params);
    os << ")\n    :precondition (and";
    render_lifted(a.preconditions, false);
    os << ")\n    :effect (and";
    render_lifted(a.add_effects, false);
    render_lifted(a.del_effects, true);
    os << "))\n";
  }
  os << ")\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_problem(const PddlDomain& d, const PddlProblem& p) {
  ValidationReport report;
  if (p.domain_name != d.name) {
    report.add(Severity::kError, "DOMAIN_MISMATCH",
               "problem targets domain '" + p.domain_name + "' but was validated against '" +
                   d.name + "'");
  }

  std::set<std::string> declared_types{"object"};
  for (const TypedName& t : d.types) declared_types.insert(t.name);
  for (const TypedName& o : p.objects) {
    if (!declared_types.contains(o.type)) {
      report.add(Severity::kError, "UNKNOWN_TYPE",
                 "object '" + o.name + "' has undeclared type '" + o.type + "'", o.loc);
    }
  }

  const auto check_atoms = [&](const std::vector<Atom>& atoms, const char* where) {
    for (const Atom& atom : atoms) {
      const PredicateSchema* pred = d.find_predicate(atom.pred);
      if (pred == nullptr) {
        report.add(Severity::kError, "UNKNOWN_PREDICATE",
                   std::string(where) + " atom " + atom.str() + " uses undeclared predicate",
                   atom.loc);
        continue;
      }
      if (pred->params.size() != atom.args.size()) {
        report.add(Severity::kError, "ARITY_MISMATCH",
                   std::string(where) + " atom " + atom.str() + " has arity " +
                       std::to_string(atom.args.size()) + ", predicate '" + atom.pred +
                       "' expects " + std::to_string(pred->params.size()),
                   atom.loc);
        continue;
      }
      for (std::size_t i = 0; i < atom.args.size(); ++i) {
        const std::string* type = p.object_type(atom.args[i]);
        if (type == nullptr) {
          report.add(Severity::kError, "UNDECLARED_OBJECT",
                     std::string(where) + " atom " + atom.str() + " references undeclared object '" +
                         atom.args[i] + "'",
                     atom.loc);
        } else if (!d.type_is_a(*type, pred->params[i].type)) {
          // A grounding planner keeps the fact around as unreachable rather
          // than rejecting the problem, so this stays below error severity.
          report.add(Severity::kWarning, "TYPE_MISMATCH",
                     std::string(where) + " atom " + atom.str() + ": argument '" +
                         atom.args[i] + "' of type '" + *type + "' where '" +
                         pred->params[i].type + "' is expected",
                     atom.loc);
        }
      }
    }
  };
  check_atoms(p.init, "init");
  check_atoms(p.goal, "goal");
  if (p.goal.empty()) {
    report.add(Severity::kError, "EMPTY_GOAL", "goal conjunction is empty");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Markup stripping

Result<std::string> strip_markup(const std::string& text) {
  // Drop fence lines wholesale; they never carry PDDL content.
  std::string unfenced;
  unfenced.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::size_t first = pos;
    while (first < eol && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    const bool fence = eol - first >= 3 && text.compare(first, 3, "```") == 0;
    if (!fence) {
      unfenced.append(text, pos, eol - pos);
      unfenced.push_back('\n');
    }
    pos = eol + 1;
  }

  // Keep the first balanced (define ...) form, comments-aware.
  std::size_t start = std::string::npos;
  for (std::size_t i = 0; i + 7 <= unfenced.size(); ++i) {
    if (unfenced[i] != '(') continue;
    std::size_t j = i + 1;
    while (j < unfenced.size() && std::isspace(static_cast<unsigned char>(unfenced[j]))) ++j;
    std::string word;
    while (j < unfenced.size() && is_symbol_char(unfenced[j])) {
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(unfenced[j]))));
      ++j;
    }
    if (word == "define") {
      start = i;
      break;
    }
  }
  if (start == std::string::npos) {
    return fail<std::string>("NO_PDDL_FOUND", "no (define ...) form found in text");
  }
  int depth = 0;
  bool in_comment = false;
  for (std::size_t i = start; i < unfenced.size(); ++i) {
    const char c = unfenced[i];
    if (in_comment) {
      if (c == '\n') in_comment = false;
      continue;
    }
    if (c == ';') {
      in_comment = true;
    } else if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
      if (depth == 0) {
        return unfenced.substr(start, i - start + 1);
      }
    }
  }
  return fail<std::string>("NO_PDDL_FOUND", "unterminated (define ...) form");
}

}  // namespace scene2pddl::pddl
