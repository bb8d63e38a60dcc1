#pragma once

#include <string>
#include <vector>

#include "scene2pddl/result.hpp"

namespace scene2pddl::pddl {

/// Ground atom: predicate applied to object names, e.g. (on red blue).
/// `loc` is parse metadata and does not participate in comparisons.
struct Atom {
  std::string pred;
  std::vector<std::string> args;
  SourceLoc loc;

  std::string str() const;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.pred == b.pred && a.args == b.args;
  }
  friend bool operator<(const Atom& a, const Atom& b) {
    if (a.pred != b.pred) return a.pred < b.pred;
    return a.args < b.args;
  }
};

/// Atom over variables (?x) and/or constants, as found in action schemas.
struct LiftedAtom {
  std::string pred;
  std::vector<std::string> args;  // "?x" marks a variable
  SourceLoc loc;
};

struct TypedName {
  std::string name;
  std::string type = "object";
  SourceLoc loc;

  friend bool operator==(const TypedName& a, const TypedName& b) {
    return a.name == b.name && a.type == b.type;
  }
  friend bool operator<(const TypedName& a, const TypedName& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.type < b.type;
  }
};

struct PredicateSchema {
  std::string name;
  std::vector<TypedName> params;
  SourceLoc loc;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> params;
  std::vector<LiftedAtom> preconditions;
  std::vector<LiftedAtom> add_effects;
  std::vector<LiftedAtom> del_effects;
  SourceLoc loc;
};

struct PddlDomain {
  std::string name;
  std::vector<std::string> requirements;
  std::vector<TypedName> types;  // name + parent ("object" at the root)
  std::vector<PredicateSchema> predicates;
  std::vector<ActionSchema> actions;

  const PredicateSchema* find_predicate(const std::string& name) const;
  const ActionSchema* find_action(const std::string& name) const;
  /// True if `sub` equals `super` or derives from it through declared parents.
  bool type_is_a(const std::string& sub, const std::string& super) const;
};

struct PddlProblem {
  std::string name;
  std::string domain_name;
  std::vector<TypedName> objects;  // unique names, sorted by name
  std::vector<Atom> init;          // sorted set
  std::vector<Atom> goal;          // sorted set, non-empty for valid problems

  const std::string* object_type(const std::string& name) const;

  friend bool operator==(const PddlProblem& a, const PddlProblem& b) {
    return a.name == b.name && a.domain_name == b.domain_name &&
           a.objects == b.objects && a.init == b.init && a.goal == b.goal;
  }
};

struct ValidationReport {
  bool ok = true;  // ok <=> no error-severity issue
  std::vector<Issue> issues;

  void add(Severity sev, std::string code, std::string message, SourceLoc loc = {});
  std::string str(const std::string& file = "") const;
};

/// Parse outcome: a value plus non-fatal issues, or a fatal error.
/// Never throws on malformed input.
template <typename T>
struct Parsed {
  std::optional<T> value;
  std::vector<Issue> issues;
  std::optional<Error> error;

  bool ok() const { return value.has_value(); }
};

Parsed<PddlDomain> parse_domain(const std::string& text);
Parsed<PddlProblem> parse_problem(const std::string& text);

/// Canonical printer: objects sorted by name, init/goal atoms sorted,
/// stable whitespace. parse_problem(render_problem(p)) == p.
std::string render_problem(const PddlProblem& p);
std::string render_domain(const PddlDomain& d);

/// Static checks a grounding-based planner performs before search:
/// domain-name match, known predicates, arities, declared types and objects.
ValidationReport validate_problem(const PddlDomain& d, const PddlProblem& p);

/// Removes code fences and surrounding prose, keeping the first balanced
/// `(define ...)` form. Idempotent. Fails with NO_PDDL_FOUND when no
/// `(define` is present.
Result<std::string> strip_markup(const std::string& text);

/// Sorted-set insertion helpers used by everything that builds atom sets.
void insert_atom(std::vector<Atom>& set, Atom atom);
bool contains_atom(const std::vector<Atom>& set, const Atom& atom);

}  // namespace scene2pddl::pddl
