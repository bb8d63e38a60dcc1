#include "scene2pddl/scene.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace scene2pddl::domains {
namespace {

using pddl::Atom;

Atom atom(std::string pred, std::vector<std::string> args = {}) {
  return Atom{std::move(pred), std::move(args), {}};
}

std::string position_name(int i) { return "p" + std::to_string(i); }
std::string tile_name(int t) { return "t" + std::to_string(t); }

// "p12" -> 12; nullopt on anything else
std::optional<int> parse_position(const std::string& s) {
  if (s.size() < 2 || s[0] != 'p') return std::nullopt;
  int v = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + (s[i] - '0');
  }
  return v;
}

std::optional<int> parse_tile(const std::string& s) {
  if (s.size() < 2 || s[0] != 't') return std::nullopt;
  int v = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + (s[i] - '0');
  }
  return v;
}

}  // namespace

std::string to_string(DomainId id) {
  switch (id) {
    case DomainId::kBlocksworld: return "blocksworld";
    case DomainId::kSlidingTile: return "sliding_tile";
    case DomainId::kKitchen: return "kitchen";
    case DomainId::kShoebox: return "shoebox";
  }
  std::abort();
}

std::optional<DomainId> domain_from_string(const std::string& name) {
  if (name == "blocksworld") return DomainId::kBlocksworld;
  if (name == "sliding_tile" || name == "sliding-tile") return DomainId::kSlidingTile;
  if (name == "kitchen") return DomainId::kKitchen;
  if (name == "shoebox") return DomainId::kShoebox;
  return std::nullopt;
}

const KitchenItem* KitchenState::find(const std::string& name) const {
  for (const KitchenItem& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

SceneState make_state(BlocksworldState s) {
  return canonical(SceneState{DomainId::kBlocksworld, std::move(s)});
}
SceneState make_state(SlidingTileState s) {
  return canonical(SceneState{DomainId::kSlidingTile, std::move(s)});
}
SceneState make_state(KitchenState s) {
  return canonical(SceneState{DomainId::kKitchen, std::move(s)});
}
SceneState make_state(ShoeboxState s) {
  return canonical(SceneState{DomainId::kShoebox, std::move(s)});
}

SceneState canonical(SceneState s) {
  switch (s.domain) {
    case DomainId::kBlocksworld: {
      auto& b = std::get<BlocksworldState>(s.payload);
      std::sort(b.stacks.begin(), b.stacks.end(),
                [](const auto& x, const auto& y) { return x.front() < y.front(); });
      break;
    }
    case DomainId::kKitchen: {
      auto& k = std::get<KitchenState>(s.payload);
      std::sort(k.items.begin(), k.items.end(),
                [](const KitchenItem& a, const KitchenItem& b) { return a.name < b.name; });
      break;
    }
    case DomainId::kShoebox: {
      auto& sb = std::get<ShoeboxState>(s.payload);
      std::sort(sb.elements.begin(), sb.elements.end());
      std::sort(sb.locations.begin(), sb.locations.end());
      break;
    }
    case DomainId::kSlidingTile:
      break;  // grid order is already canonical
  }
  return s;
}

Result<void> validate_state(const SceneState& s) {
  switch (s.domain) {
    case DomainId::kBlocksworld: {
      const auto& b = s.blocksworld();
      std::set<std::string> seen;
      for (const auto& stack : b.stacks) {
        if (stack.empty()) return Error{"INVALID_STATE", "empty stack"};
        for (const auto& block : stack) {
          if (!seen.insert(block).second) {
            return Error{"INVALID_STATE", "block '" + block + "' appears twice"};
          }
        }
      }
      return {};
    }
    case DomainId::kSlidingTile: {
      const auto& t = s.sliding_tile();
      if (t.width < 2 || t.height < 2) {
        return Error{"INVALID_STATE", "grid must be at least 2x2"};
      }
      const int n = t.width * t.height;
      if (static_cast<int>(t.cells.size()) != n) {
        return Error{"INVALID_STATE", "cell count does not match grid size"};
      }
      std::vector<int> count(static_cast<std::size_t>(n), 0);
      for (int v : t.cells) {
        if (v < 0 || v >= n) return Error{"INVALID_STATE", "tile number out of range"};
        ++count[static_cast<std::size_t>(v)];
      }
      for (int v = 0; v < n; ++v) {
        if (count[static_cast<std::size_t>(v)] != 1) {
          return Error{"INVALID_STATE",
                       v == 0 ? std::string("grid must have exactly one blank")
                              : "tile " + std::to_string(v) + " must appear exactly once"};
        }
      }
      return {};
    }
    case DomainId::kKitchen: {
      const auto& k = s.kitchen();
      std::set<std::string> names;
      std::set<std::string> occupied;
      for (const KitchenItem& item : k.items) {
        if (!names.insert(item.name).second) {
          return Error{"INVALID_STATE", "item '" + item.name + "' appears twice"};
        }
        if (is_kitchen_location(item.name)) {
          return Error{"STOVE_AS_ITEM", "'" + item.name + "' is a location, not an item"};
        }
        if (!is_kitchen_location(item.location)) {
          return Error{"INVALID_STATE", "unknown location '" + item.location + "'"};
        }
        if (!occupied.insert(item.location).second) {
          return Error{"INVALID_STATE",
                       "location '" + item.location + "' holds more than one item"};
        }
      }
      return {};
    }
    case DomainId::kShoebox: {
      const auto& sb = s.shoebox();
      std::set<std::string> elements(sb.elements.begin(), sb.elements.end());
      std::set<std::string> locations(sb.locations.begin(), sb.locations.end());
      if (elements.size() != sb.elements.size()) {
        return Error{"INVALID_STATE", "duplicate element name"};
      }
      if (locations.size() != sb.locations.size()) {
        return Error{"INVALID_STATE", "duplicate location name"};
      }
      std::set<std::string> used;
      for (const auto& [element, location] : sb.assignment) {
        if (!elements.contains(element)) {
          return Error{"INVALID_STATE", "assignment references unknown element '" + element + "'"};
        }
        if (!locations.contains(location)) {
          return Error{"INVALID_STATE", "assignment references unknown location '" + location + "'"};
        }
        if (!used.insert(location).second) {
          return Error{"INVALID_STATE", "location '" + location + "' assigned twice"};
        }
      }
      return {};
    }
  }
  std::abort();
}

// ---------------------------------------------------------------------------
// Predicates

std::vector<Atom> to_predicates(const SceneState& s) {
  std::vector<Atom> out;
  switch (s.domain) {
    case DomainId::kBlocksworld: {
      const auto& b = s.blocksworld();
      for (const auto& stack : b.stacks) {
        pddl::insert_atom(out, atom("ontable", {stack.front()}));
        for (std::size_t i = 1; i < stack.size(); ++i) {
          pddl::insert_atom(out, atom("on", {stack[i], stack[i - 1]}));
        }
        pddl::insert_atom(out, atom("clear", {stack.back()}));
      }
      pddl::insert_atom(out, atom("arm-empty"));
      break;
    }
    case DomainId::kSlidingTile: {
      const auto& t = s.sliding_tile();
      for (int y = 1; y <= t.height; ++y) {
        for (int x = 1; x <= t.width; ++x) {
          const int v = t.cell(x, y);
          if (v == 0) {
            pddl::insert_atom(out, atom("blank", {position_name(x), position_name(y)}));
          } else {
            pddl::insert_atom(
                out, atom("at", {tile_name(v), position_name(x), position_name(y)}));
          }
        }
      }
      const int m = std::max(t.width, t.height);
      for (int i = 1; i < m; ++i) {
        pddl::insert_atom(out, atom("inc", {position_name(i), position_name(i + 1)}));
        pddl::insert_atom(out, atom("dec", {position_name(i + 1), position_name(i)}));
      }
      break;
    }
    case DomainId::kKitchen: {
      const auto& k = s.kitchen();
      std::set<std::string> occupied;
      for (const KitchenItem& item : k.items) {
        pddl::insert_atom(out, atom("at", {item.name, item.location}));
        occupied.insert(item.location);
      }
      for (const std::string& loc : kitchen_locations()) {
        if (!occupied.contains(loc)) pddl::insert_atom(out, atom("clear", {loc}));
      }
      break;
    }
    case DomainId::kShoebox: {
      const auto& sb = s.shoebox();
      std::set<std::string> used;
      for (const auto& [element, location] : sb.assignment) {
        pddl::insert_atom(out, atom("at", {element, location}));
        used.insert(location);
      }
      for (const std::string& element : sb.elements) {
        if (!sb.assignment.contains(element)) {
          pddl::insert_atom(out, atom("unplaced", {element}));
        }
      }
      for (const std::string& location : sb.locations) {
        if (!used.contains(location)) pddl::insert_atom(out, atom("clear", {location}));
      }
      break;
    }
  }
  return out;
}

bool is_static_atom(const Atom& a) { return a.pred == "inc" || a.pred == "dec"; }

namespace {

Result<SceneState> blocksworld_from_atoms(const std::vector<Atom>& atoms) {
  std::map<std::string, std::string> sits_on;  // block -> support
  std::set<std::string> on_table;
  std::set<std::string> blocks;
  std::set<std::string> clear_marks;
  for (const Atom& a : atoms) {
    if (a.pred == "on") {
      if (a.args.size() != 2) return fail<SceneState>("INCONSISTENT_STATE", "bad on arity");
      blocks.insert(a.args[0]);
      blocks.insert(a.args[1]);
      if (sits_on.contains(a.args[0]) && sits_on[a.args[0]] != a.args[1]) {
        return fail<SceneState>("INCONSISTENT_STATE",
                                "block '" + a.args[0] + "' is on two blocks");
      }
      sits_on[a.args[0]] = a.args[1];
    } else if (a.pred == "ontable") {
      if (a.args.size() != 1) return fail<SceneState>("INCONSISTENT_STATE", "bad ontable arity");
      blocks.insert(a.args[0]);
      on_table.insert(a.args[0]);
    } else if (a.pred == "clear") {
      if (a.args.size() != 1) return fail<SceneState>("INCONSISTENT_STATE", "bad clear arity");
      blocks.insert(a.args[0]);
      clear_marks.insert(a.args[0]);
    } else if (a.pred == "holding") {
      return fail<SceneState>("INCONSISTENT_STATE",
                              a.str() + " has no scene counterpart");
    } else if (a.pred == "arm-empty") {
      // implied
    } else {
      return fail<SceneState>("INCONSISTENT_STATE", "foreign predicate '" + a.pred + "'");
    }
  }
  std::map<std::string, std::string> above;  // support -> block resting on it
  for (const auto& [block, support] : sits_on) {
    if (on_table.contains(block)) {
      return fail<SceneState>("INCONSISTENT_STATE",
                              "block '" + block + "' both on table and on '" + support + "'");
    }
    if (above.contains(support)) {
      return fail<SceneState>("INCONSISTENT_STATE",
                              "two blocks rest on '" + support + "'");
    }
    above[support] = block;
  }
  for (const std::string& block : blocks) {
    if (!on_table.contains(block) && !sits_on.contains(block)) {
      return fail<SceneState>("MISSING_ATOMS",
                              "block '" + block + "' has no on/ontable atom");
    }
  }
  for (const std::string& marked : clear_marks) {
    if (above.contains(marked)) {
      return fail<SceneState>("INCONSISTENT_STATE",
                              "block '" + marked + "' is marked clear but supports a block");
    }
  }
  BlocksworldState state;
  std::set<std::string> placed;
  for (const std::string& base : on_table) {
    std::vector<std::string> stack{base};
    placed.insert(base);
    std::string cur = base;
    while (above.contains(cur)) {
      cur = above[cur];
      if (placed.contains(cur)) {
        return fail<SceneState>("INCONSISTENT_STATE", "cyclic stacking at '" + cur + "'");
      }
      stack.push_back(cur);
      placed.insert(cur);
    }
    state.stacks.push_back(std::move(stack));
  }
  if (placed.size() != blocks.size()) {
    return fail<SceneState>("INCONSISTENT_STATE", "stacking contains a cycle");
  }
  return make_state(std::move(state));
}

Result<SceneState> sliding_tile_from_atoms(const std::vector<Atom>& atoms) {
  struct Placement {
    int tile, x, y;
  };
  std::vector<Placement> placements;
  std::optional<std::pair<int, int>> blank;
  int max_x = 0;
  int max_y = 0;
  int max_tile = 0;
  for (const Atom& a : atoms) {
    if (is_static_atom(a)) continue;
    if (a.pred == "at" && a.args.size() == 3) {
      auto t = parse_tile(a.args[0]);
      auto x = parse_position(a.args[1]);
      auto y = parse_position(a.args[2]);
      if (!t || !x || !y) {
        return fail<SceneState>("INCONSISTENT_STATE", "unrecognized at atom " + a.str());
      }
      placements.push_back({*t, *x, *y});
      max_x = std::max(max_x, *x);
      max_y = std::max(max_y, *y);
      max_tile = std::max(max_tile, *t);
    } else if (a.pred == "blank" && a.args.size() == 2) {
      auto x = parse_position(a.args[0]);
      auto y = parse_position(a.args[1]);
      if (!x || !y) return fail<SceneState>("INCONSISTENT_STATE", "unrecognized blank atom");
      if (blank.has_value() && *blank != std::make_pair(*x, *y)) {
        return fail<SceneState>("INCONSISTENT_STATE", "two blank cells");
      }
      blank = {*x, *y};
      max_x = std::max(max_x, *x);
      max_y = std::max(max_y, *y);
    } else {
      return fail<SceneState>("INCONSISTENT_STATE", "foreign atom " + a.str());
    }
  }
  if (placements.empty()) return fail<SceneState>("MISSING_ATOMS", "no tile placements");
  // Dimensions: tiles fill the grid, so every row and column is touched.
  const int width = max_x;
  const int height = max_y;
  if (width * height - 1 != max_tile ||
      static_cast<int>(placements.size()) != max_tile) {
    return fail<SceneState>("MISSING_ATOMS", "tile placements do not fill the grid");
  }
  SlidingTileState state;
  state.width = width;
  state.height = height;
  state.cells.assign(static_cast<std::size_t>(width * height), -1);
  for (const Placement& p : placements) {
    if (p.x < 1 || p.x > width || p.y < 1 || p.y > height) {
      return fail<SceneState>("INCONSISTENT_STATE", "placement outside the grid");
    }
    int& cell = state.cell(p.x, p.y);
    if (cell != -1) {
      return fail<SceneState>("INCONSISTENT_STATE", "two entries at cell (" +
                                                        std::to_string(p.x) + ", " +
                                                        std::to_string(p.y) + ")");
    }
    cell = p.tile;
  }
  std::vector<int> seen(static_cast<std::size_t>(width * height), 0);
  for (const Placement& p : placements) {
    if (p.tile < 1 || p.tile > max_tile || seen[static_cast<std::size_t>(p.tile)]++) {
      return fail<SceneState>("INCONSISTENT_STATE",
                              "tile " + std::to_string(p.tile) + " placed twice or out of range");
    }
  }
  int free_x = 0;
  int free_y = 0;
  int free_count = 0;
  for (int y = 1; y <= height; ++y) {
    for (int x = 1; x <= width; ++x) {
      if (state.cell(x, y) == -1) {
        free_x = x;
        free_y = y;
        ++free_count;
      }
    }
  }
  if (free_count != 1) {
    return fail<SceneState>("INCONSISTENT_STATE", "grid does not have exactly one free cell");
  }
  if (blank.has_value() && *blank != std::make_pair(free_x, free_y)) {
    return fail<SceneState>("INCONSISTENT_STATE", "blank atom contradicts tile placements");
  }
  state.cell(free_x, free_y) = 0;
  return make_state(std::move(state));
}

Result<SceneState> kitchen_from_atoms(const std::vector<Atom>& atoms) {
  KitchenState state;
  std::set<std::string> occupied;
  std::set<std::string> clear_marks;
  for (const Atom& a : atoms) {
    if (a.pred == "at" && a.args.size() == 2) {
      const std::string& name = a.args[0];
      const std::string& loc = a.args[1];
      if (name == "stove") {
        return fail<SceneState>("STOVE_AS_ITEM", "the stove is a location, not an item");
      }
      if (is_kitchen_location(name)) {
        return fail<SceneState>("INCONSISTENT_STATE",
                                "'" + name + "' is a location, not an item");
      }
      if (!is_kitchen_location(loc)) {
        return fail<SceneState>("INCONSISTENT_STATE", "unknown location '" + loc + "'");
      }
      if (state.find(name) != nullptr) {
        return fail<SceneState>("INCONSISTENT_STATE", "item '" + name + "' at two locations");
      }
      if (!occupied.insert(loc).second) {
        return fail<SceneState>("INCONSISTENT_STATE",
                                "two items at location '" + loc + "'");
      }
      KitchenItem item;
      item.name = name;
      item.location = loc;
      if (const KitchenCatalogEntry* entry = kitchen_catalog_find(name)) {
        item.type = entry->type;
        item.detail = entry->detail;
      } else {
        item.type = "item";
      }
      state.items.push_back(std::move(item));
    } else if (a.pred == "clear" && a.args.size() == 1) {
      if (!is_kitchen_location(a.args[0])) {
        return fail<SceneState>("INCONSISTENT_STATE", "unknown location '" + a.args[0] + "'");
      }
      clear_marks.insert(a.args[0]);
    } else {
      return fail<SceneState>("INCONSISTENT_STATE", "foreign atom " + a.str());
    }
  }
  for (const std::string& loc : clear_marks) {
    if (occupied.contains(loc)) {
      return fail<SceneState>("INCONSISTENT_STATE",
                              "location '" + loc + "' is marked clear but occupied");
    }
  }
  return make_state(std::move(state));
}

Result<SceneState> shoebox_from_atoms(const std::vector<Atom>& atoms) {
  ShoeboxState state;
  std::set<std::string> elements;
  std::set<std::string> locations;
  std::set<std::string> unplaced;
  std::set<std::string> clear_marks;
  for (const Atom& a : atoms) {
    if (a.pred == "at" && a.args.size() == 2) {
      elements.insert(a.args[0]);
      locations.insert(a.args[1]);
      if (state.assignment.contains(a.args[0])) {
        return fail<SceneState>("INCONSISTENT_STATE",
                                "element '" + a.args[0] + "' at two locations");
      }
      state.assignment[a.args[0]] = a.args[1];
    } else if (a.pred == "unplaced" && a.args.size() == 1) {
      elements.insert(a.args[0]);
      unplaced.insert(a.args[0]);
    } else if (a.pred == "clear" && a.args.size() == 1) {
      locations.insert(a.args[0]);
      clear_marks.insert(a.args[0]);
    } else {
      return fail<SceneState>("INCONSISTENT_STATE", "foreign atom " + a.str());
    }
  }
  std::set<std::string> used;
  for (const auto& [element, location] : state.assignment) {
    if (unplaced.contains(element)) {
      return fail<SceneState>("INCONSISTENT_STATE",
                              "element '" + element + "' both placed and unplaced");
    }
    if (!used.insert(location).second) {
      return fail<SceneState>("INCONSISTENT_STATE",
                              "two elements at location '" + location + "'");
    }
    if (clear_marks.contains(location)) {
      return fail<SceneState>("INCONSISTENT_STATE",
                              "location '" + location + "' is marked clear but occupied");
    }
  }
  state.elements.assign(elements.begin(), elements.end());
  state.locations.assign(locations.begin(), locations.end());
  return make_state(std::move(state));
}

}  // namespace

Result<SceneState> from_predicates(DomainId domain, const std::vector<Atom>& atoms) {
  switch (domain) {
    case DomainId::kBlocksworld: return blocksworld_from_atoms(atoms);
    case DomainId::kSlidingTile: return sliding_tile_from_atoms(atoms);
    case DomainId::kKitchen: return kitchen_from_atoms(atoms);
    case DomainId::kShoebox: return shoebox_from_atoms(atoms);
  }
  std::abort();
}

// ---------------------------------------------------------------------------
// Solvability

namespace {

Result<bool> check_universe(const SceneState& init, const SceneState& goal) {
  if (init.domain != goal.domain) {
    return fail<bool>("UNIVERSE_MISMATCH", "states belong to different domains");
  }
  switch (init.domain) {
    case DomainId::kBlocksworld: {
      std::set<std::string> a, b;
      for (const auto& stack : init.blocksworld().stacks) a.insert(stack.begin(), stack.end());
      for (const auto& stack : goal.blocksworld().stacks) b.insert(stack.begin(), stack.end());
      if (a != b) return fail<bool>("UNIVERSE_MISMATCH", "block sets differ");
      break;
    }
    case DomainId::kSlidingTile: {
      if (init.sliding_tile().width != goal.sliding_tile().width ||
          init.sliding_tile().height != goal.sliding_tile().height) {
        return fail<bool>("UNIVERSE_MISMATCH", "grid sizes differ");
      }
      break;
    }
    case DomainId::kKitchen: {
      std::set<std::string> a, b;
      for (const auto& item : init.kitchen().items) a.insert(item.name);
      for (const auto& item : goal.kitchen().items) b.insert(item.name);
      if (a != b) return fail<bool>("UNIVERSE_MISMATCH", "item sets differ");
      break;
    }
    case DomainId::kShoebox: {
      const auto& a = init.shoebox();
      const auto& b = goal.shoebox();
      if (a.elements != b.elements || a.locations != b.locations) {
        return fail<bool>("UNIVERSE_MISMATCH", "element or location sets differ");
      }
      break;
    }
  }
  return true;
}

int permutation_parity(std::vector<int> perm) {
  int parity = 0;
  std::vector<bool> visited(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (visited[i]) continue;
    std::size_t cur = i;
    int cycle = 0;
    while (!visited[cur]) {
      visited[cur] = true;
      cur = static_cast<std::size_t>(perm[cur]);
      ++cycle;
    }
    parity ^= (cycle - 1) & 1;
  }
  return parity;
}

}  // namespace

Result<bool> is_solvable(const SceneState& init, const SceneState& goal) {
  auto universe = check_universe(init, goal);
  if (!universe.ok()) return universe;

  switch (init.domain) {
    case DomainId::kBlocksworld:
    case DomainId::kShoebox:
      return true;  // constructive: tear down to table / staging, rebuild
    case DomainId::kKitchen: {
      const auto items = init.kitchen().items.size();
      return items < kitchen_locations().size() || init == goal;
    }
    case DomainId::kSlidingTile: {
      const auto& a = init.sliding_tile();
      const auto& b = goal.sliding_tile();
      const int n = a.width * a.height;
      // Cell index of each value in the goal.
      std::vector<int> goal_pos(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) goal_pos[static_cast<std::size_t>(b.cells[static_cast<std::size_t>(i)])] = i;
      std::vector<int> perm(static_cast<std::size_t>(n));
      int blank_init = 0;
      int blank_goal = 0;
      for (int i = 0; i < n; ++i) {
        const int v = a.cells[static_cast<std::size_t>(i)];
        perm[static_cast<std::size_t>(i)] = goal_pos[static_cast<std::size_t>(v)];
        if (v == 0) blank_init = i;
        if (b.cells[static_cast<std::size_t>(i)] == 0) blank_goal = i;
      }
      // Each legal move is a transposition with the blank, and changes the
      // blank's taxicab distance to its goal cell by one.
      const int taxi = std::abs(blank_init % a.width - blank_goal % a.width) +
                       std::abs(blank_init / a.width - blank_goal / a.width);
      return permutation_parity(perm) == (taxi & 1);
    }
  }
  std::abort();
}

// ---------------------------------------------------------------------------
// PDDL glue

std::vector<pddl::TypedName> object_declarations(const SceneState& s) {
  std::vector<pddl::TypedName> out;
  switch (s.domain) {
    case DomainId::kBlocksworld: {
      std::set<std::string> blocks;
      for (const auto& stack : s.blocksworld().stacks) blocks.insert(stack.begin(), stack.end());
      for (const std::string& b : blocks) out.push_back({b, "block", {}});
      break;
    }
    case DomainId::kSlidingTile: {
      const auto& t = s.sliding_tile();
      for (int v = 1; v < t.width * t.height; ++v) out.push_back({tile_name(v), "tile", {}});
      for (int i = 1; i <= std::max(t.width, t.height); ++i) {
        out.push_back({position_name(i), "position", {}});
      }
      break;
    }
    case DomainId::kKitchen: {
      for (const std::string& loc : kitchen_locations()) out.push_back({loc, "location", {}});
      for (const KitchenItem& item : s.kitchen().items) {
        if (is_kitchen_location(item.name)) continue;  // already declared as a location
        out.push_back({item.name, item.type.empty() ? "item" : item.type, {}});
      }
      break;
    }
    case DomainId::kShoebox: {
      for (const std::string& e : s.shoebox().elements) out.push_back({e, "element", {}});
      for (const std::string& l : s.shoebox().locations) out.push_back({l, "location", {}});
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

pddl::PddlProblem derive_problem(const std::string& name, const SceneState& init,
                                 const SceneState& goal) {
  pddl::PddlProblem p;
  p.name = name;
  p.domain_name = domain_ast(init.domain).name;
  std::set<pddl::TypedName> objects;
  for (auto& o : object_declarations(init)) objects.insert(o);
  for (auto& o : object_declarations(goal)) objects.insert(o);
  p.objects.assign(objects.begin(), objects.end());
  p.init = to_predicates(init);
  for (const pddl::Atom& a : to_predicates(goal)) {
    if (!is_static_atom(a)) pddl::insert_atom(p.goal, a);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Kitchen fixtures

const std::vector<KitchenCatalogEntry>& kitchen_catalog() {
  static const std::vector<KitchenCatalogEntry> catalog = {
      {"lemon", "fruit", "lemon"},
      {"apple", "fruit", "apple"},
      {"cutting_board", "cutting_board", ""},
      {"black_mug", "mug", "black"},
      {"green_mug", "mug", "green"},
      {"kettle", "kettle", ""},
      {"wine", "wine", ""},
      {"cola", "soda", "cola"},
      {"fanta", "soda", "fanta"},
  };
  return catalog;
}

const KitchenCatalogEntry* kitchen_catalog_find(const std::string& name) {
  for (const KitchenCatalogEntry& entry : kitchen_catalog()) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

const std::vector<std::string>& kitchen_locations() {
  static const std::vector<std::string> locations = {"counter", "sink", "shelf", "stove"};
  return locations;
}

bool is_kitchen_location(const std::string& name) {
  const auto& locs = kitchen_locations();
  return std::find(locs.begin(), locs.end(), name) != locs.end();
}

}  // namespace scene2pddl::domains
