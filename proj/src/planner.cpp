#include "scene2pddl/planner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

#include "scene2pddl/rng.hpp"

namespace scene2pddl::planner {
namespace {

using pddl::Atom;
using pddl::LiftedAtom;
using pddl::PddlDomain;
using pddl::PddlProblem;

Atom bind(const LiftedAtom& lifted, const std::map<std::string, std::string>& binding) {
  Atom atom;
  atom.pred = lifted.pred;
  atom.args.reserve(lifted.args.size());
  for (const std::string& arg : lifted.args) {
    if (arg.starts_with('?')) {
      atom.args.push_back(binding.at(arg));
    } else {
      atom.args.push_back(arg);
    }
  }
  return atom;
}

struct StateHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const {
    return static_cast<std::size_t>(
        fnv1a(words.data(), words.size() * sizeof(std::uint64_t)));
  }
};

}  // namespace

std::string GroundAction::str() const {
  std::string s = "(" + schema;
  for (const std::string& a : args) {
    s += ' ';
    s += a;
  }
  s += ')';
  return s;
}

int GroundTask::atom_index(const Atom& atom) const {
  const auto it = std::lower_bound(atoms.begin(), atoms.end(), atom);
  if (it == atoms.end() || !(*it == atom)) return -1;
  return static_cast<int>(it - atoms.begin());
}

std::string Plan::str(const GroundTask& task) const {
  std::string out;
  for (std::size_t step : steps) {
    out += task.actions[step].str();
    out += '\n';
  }
  return out;
}

Result<GroundTask> ground(const PddlDomain& d, const PddlProblem& p,
                          const GroundOptions& options) {
  // Static predicates: appear in no action effect. Their truth is fixed by
  // init, so bindings violating them can be pruned up front.
  std::set<std::string> dynamic_preds;
  for (const auto& action : d.actions) {
    for (const LiftedAtom& a : action.add_effects) dynamic_preds.insert(a.pred);
    for (const LiftedAtom& a : action.del_effects) dynamic_preds.insert(a.pred);
  }

  std::map<std::string, std::vector<std::string>> objects_by_type;
  for (const auto& obj : p.objects) {
    for (const auto& type : d.types) {
      if (type.name != "object" && d.type_is_a(obj.type, type.name)) {
        objects_by_type[type.name].push_back(obj.name);
      }
    }
    objects_by_type["object"].push_back(obj.name);
  }
  for (auto& [type, names] : objects_by_type) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
  }

  struct PendingAction {
    std::string schema;
    std::vector<std::string> args;
    std::vector<Atom> pre, add, del;
  };
  std::vector<PendingAction> pending;

  for (const auto& schema : d.actions) {
    std::vector<const std::vector<std::string>*> pools;
    pools.reserve(schema.params.size());
    bool empty_pool = false;
    static const std::vector<std::string> kNoObjects;
    for (const auto& param : schema.params) {
      const auto it = objects_by_type.find(param.type);
      if (it == objects_by_type.end() || it->second.empty()) {
        empty_pool = true;
        pools.push_back(&kNoObjects);
      } else {
        pools.push_back(&it->second);
      }
    }
    if (empty_pool && !schema.params.empty()) continue;

    std::vector<std::size_t> cursor(schema.params.size(), 0);
    while (true) {
      std::map<std::string, std::string> binding;
      for (std::size_t i = 0; i < schema.params.size(); ++i) {
        binding[schema.params[i].name] = (*pools[i])[cursor[i]];
      }

      PendingAction ga;
      ga.schema = schema.name;
      for (const auto& param : schema.params) ga.args.push_back(binding.at(param.name));
      bool keep = true;
      for (const LiftedAtom& lit : schema.preconditions) {
        Atom atom = bind(lit, binding);
        if (!dynamic_preds.contains(atom.pred)) {
          if (!pddl::contains_atom(p.init, atom)) {
            keep = false;
            break;
          }
          continue;  // statically true; no need to carry it
        }
        pddl::insert_atom(ga.pre, std::move(atom));
      }
      if (keep) {
        for (const LiftedAtom& lit : schema.add_effects) {
          pddl::insert_atom(ga.add, bind(lit, binding));
        }
        for (const LiftedAtom& lit : schema.del_effects) {
          pddl::insert_atom(ga.del, bind(lit, binding));
        }
        for (const Atom& a : ga.add) {
          if (pddl::contains_atom(ga.del, a)) {
            keep = false;  // self-cancelling instantiation, e.g. stack(b, b)
            break;
          }
        }
      }
      if (keep) {
        pending.push_back(std::move(ga));
        if (pending.size() > options.max_ground_actions) {
          return fail<GroundTask>("GROUNDING_EXPLOSION",
                                  "ground action count exceeds cap of " +
                                      std::to_string(options.max_ground_actions));
        }
      }

      // Advance the mixed-radix cursor (rightmost fastest).
      std::size_t k = schema.params.size();
      while (k > 0) {
        --k;
        if (++cursor[k] < pools[k]->size()) break;
        cursor[k] = 0;
        if (k == 0) goto schema_done;
      }
      if (schema.params.empty()) break;
    }
  schema_done:;
  }

  std::sort(pending.begin(), pending.end(), [](const PendingAction& a, const PendingAction& b) {
    if (a.schema != b.schema) return a.schema < b.schema;
    return a.args < b.args;
  });

  GroundTask task;
  std::set<Atom> universe(p.init.begin(), p.init.end());
  universe.insert(p.goal.begin(), p.goal.end());
  for (const PendingAction& a : pending) {
    universe.insert(a.pre.begin(), a.pre.end());
    universe.insert(a.add.begin(), a.add.end());
    universe.insert(a.del.begin(), a.del.end());
  }
  task.atoms.assign(universe.begin(), universe.end());

  const std::size_t n = task.atoms.size();
  const auto to_bitset = [&](const std::vector<Atom>& atoms) {
    Bitset b(n);
    for (const Atom& a : atoms) b.set(static_cast<std::size_t>(task.atom_index(a)));
    return b;
  };
  task.init = to_bitset(p.init);
  task.goal = to_bitset(p.goal);
  task.actions.reserve(pending.size());
  for (PendingAction& a : pending) {
    GroundAction ga;
    ga.schema = std::move(a.schema);
    ga.args = std::move(a.args);
    ga.pre = to_bitset(a.pre);
    ga.add = to_bitset(a.add);
    ga.del = to_bitset(a.del);
    task.actions.push_back(std::move(ga));
  }
  return task;
}

Result<Bitset> apply(const Bitset& state, const GroundAction& action) {
  if (!state.contains_all(action.pre)) {
    return fail<Bitset>("PRECONDITION_VIOLATED",
                        "precondition of " + action.str() + " does not hold");
  }
  Bitset next = state;
  next.apply(action.del, action.add);
  return next;
}

SolveResult solve(const GroundTask& task, const SearchBudget& budget) {
  const auto started = std::chrono::steady_clock::now();

  struct Node {
    std::size_t f;
    std::uint64_t seq;  // FIFO tie-break among equal f
    std::size_t id;     // index into `states`
  };
  struct NodeGreater {
    bool operator()(const Node& a, const Node& b) const {
      if (a.f != b.f) return a.f > b.f;
      return a.seq > b.seq;
    }
  };

  struct StateRecord {
    Bitset state;
    std::size_t g;
    std::size_t parent;       // index into `states`
    std::size_t via_action;   // action applied at parent
  };

  std::vector<StateRecord> states;
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, StateHash> best_g;
  std::priority_queue<Node, std::vector<Node>, NodeGreater> open;

  const auto h = [&](const Bitset& s) { return s.count_missing(task.goal); };

  states.push_back({task.init, 0, 0, 0});
  best_g[task.init.words()] = 0;
  std::uint64_t seq = 0;
  open.push({h(task.init), seq++, 0});

  std::size_t expanded = 0;
  while (!open.empty()) {
    const Node node = open.top();
    open.pop();
    const StateRecord& record = states[node.id];
    const auto it = best_g.find(record.state.words());
    if (it != best_g.end() && it->second < record.g) continue;  // stale entry

    if (record.state.contains_all(task.goal)) {
      Plan plan;
      std::size_t cur = node.id;
      while (cur != 0) {
        plan.steps.push_back(states[cur].via_action);
        cur = states[cur].parent;
      }
      std::reverse(plan.steps.begin(), plan.steps.end());
      return plan;
    }

    ++expanded;
    if (expanded > budget.max_expanded_nodes) return BudgetExhausted{expanded};
    if ((expanded & 1023) == 0 &&
        std::chrono::steady_clock::now() - started > budget.max_wall_time) {
      return BudgetExhausted{expanded};
    }

    const Bitset state = record.state;  // copy: `states` reallocates below
    const std::size_t g = record.g;
    for (std::size_t ai = 0; ai < task.actions.size(); ++ai) {
      const GroundAction& action = task.actions[ai];
      if (!state.contains_all(action.pre)) continue;
      Bitset next = state;
      next.apply(action.del, action.add);
      const std::size_t ng = g + 1;
      const auto seen = best_g.find(next.words());
      if (seen != best_g.end() && seen->second <= ng) continue;
      best_g[next.words()] = ng;
      states.push_back({std::move(next), ng, node.id, ai});
      open.push({ng + h(states.back().state), seq++, states.size() - 1});
    }
  }
  return Unsolvable{};
}

PlanCheck validate_plan(const GroundTask& task, const Plan& plan) {
  Bitset state = task.init;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const std::size_t ai = plan.steps[i];
    if (ai >= task.actions.size()) {
      return {false, i, "step " + std::to_string(i) + " references unknown action"};
    }
    auto next = apply(state, task.actions[ai]);
    if (!next.ok()) {
      return {false, i,
              "step " + std::to_string(i) + ": " + next.error().message};
    }
    state = next.take();
  }
  if (!state.contains_all(task.goal)) {
    return {false, plan.steps.size(), "goal not satisfied after final step"};
  }
  return {true, 0, ""};
}

}  // namespace scene2pddl::planner
