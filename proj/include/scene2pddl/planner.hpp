#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "scene2pddl/pddl.hpp"
#include "scene2pddl/result.hpp"

namespace scene2pddl::planner {

/// Fixed-universe bitset over ground atoms.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool contains_all(const Bitset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((other.words_[w] & ~words_[w]) != 0) return false;
    }
    return true;
  }

  std::size_t count_missing(const Bitset& required) const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      n += static_cast<std::size_t>(__builtin_popcountll(required.words_[w] & ~words_[w]));
    }
    return n;
  }

  void apply(const Bitset& del, const Bitset& add) {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] = (words_[w] & ~del.words_[w]) | add.words_[w];
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.bits_ == b.bits_ && a.words_ == b.words_;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct GroundAction {
  std::string schema;             // action schema name
  std::vector<std::string> args;  // bound objects, parameter order
  Bitset pre, add, del;

  std::string str() const;
};

struct GroundTask {
  std::vector<pddl::Atom> atoms;  // lexicographically sorted universe
  Bitset init;
  Bitset goal;
  std::vector<GroundAction> actions;  // sorted by (schema, args)

  int atom_index(const pddl::Atom& atom) const;  // -1 if absent
};

struct GroundOptions {
  std::size_t max_ground_actions = 2'000'000;
};

/// Instantiates action schemas over type-compatible object tuples.
/// Bindings that fail a static precondition (a predicate no action changes)
/// against init are skipped, as are bindings whose instantiated effect would
/// add and delete the same atom.
Result<GroundTask> ground(const pddl::PddlDomain& d, const pddl::PddlProblem& p,
                          const GroundOptions& options = {});

struct Plan {
  std::vector<std::size_t> steps;  // indexes into GroundTask::actions

  std::string str(const GroundTask& task) const;  // IPC format, one action per line
};

struct Unsolvable {};
struct BudgetExhausted {
  std::size_t expanded = 0;
};

using SolveResult = std::variant<Plan, Unsolvable, BudgetExhausted>;

struct SearchBudget {
  std::size_t max_expanded_nodes = 5'000'000;
  std::chrono::milliseconds max_wall_time{30'000};
};

/// A* over state bitsets with the goal-count heuristic. Deterministic:
/// ties broken FIFO, successors generated in ascending action index.
SolveResult solve(const GroundTask& task, const SearchBudget& budget = {});

/// (state - del) | add, guarded by the precondition.
Result<Bitset> apply(const Bitset& state, const GroundAction& action);

struct PlanCheck {
  bool ok = false;
  std::size_t failing_step = 0;  // meaningful when !ok
  std::string message;
};

/// Replays the plan from init; verifies every precondition and the goal.
PlanCheck validate_plan(const GroundTask& task, const Plan& plan);

}  // namespace scene2pddl::planner
