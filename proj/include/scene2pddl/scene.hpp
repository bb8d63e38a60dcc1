#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scene2pddl/pddl.hpp"
#include "scene2pddl/result.hpp"

namespace scene2pddl::domains {

enum class DomainId { kBlocksworld, kSlidingTile, kKitchen, kShoebox };

std::string to_string(DomainId id);
std::optional<DomainId> domain_from_string(const std::string& name);

/// Stacks listed bottom-to-top; canonical order sorts stacks by bottom block.
/// The arm is always empty: a held block has no visual counterpart.
struct BlocksworldState {
  std::vector<std::vector<std::string>> stacks;

  friend bool operator==(const BlocksworldState&, const BlocksworldState&) = default;
};

/// Row-major cells, 0 = blank. (x, y) are 1-based with x the column.
struct SlidingTileState {
  int width = 0;
  int height = 0;
  std::vector<int> cells;

  int cell(int x, int y) const { return cells[static_cast<std::size_t>((y - 1) * width + (x - 1))]; }
  int& cell(int x, int y) { return cells[static_cast<std::size_t>((y - 1) * width + (x - 1))]; }

  friend bool operator==(const SlidingTileState&, const SlidingTileState&) = default;
};

struct KitchenItem {
  std::string name;
  std::string type;    // fruit, mug, soda, cutting_board, kettle, wine
  std::string detail;  // brand or color token; may be empty
  std::string location;

  friend bool operator==(const KitchenItem&, const KitchenItem&) = default;
};

struct KitchenState {
  std::vector<KitchenItem> items;  // canonical: sorted by name

  const KitchenItem* find(const std::string& name) const;

  friend bool operator==(const KitchenState&, const KitchenState&) = default;
};

/// One-to-one correspondence task: elements to be distributed over target
/// locations. `assignment` maps placed elements; absent key = unplaced.
struct ShoeboxState {
  std::vector<std::string> elements;   // canonical: sorted
  std::vector<std::string> locations;  // canonical: sorted
  std::map<std::string, std::string> assignment;

  friend bool operator==(const ShoeboxState&, const ShoeboxState&) = default;
};

struct SceneState {
  DomainId domain = DomainId::kBlocksworld;
  std::variant<BlocksworldState, SlidingTileState, KitchenState, ShoeboxState> payload;

  const BlocksworldState& blocksworld() const { return std::get<BlocksworldState>(payload); }
  const SlidingTileState& sliding_tile() const { return std::get<SlidingTileState>(payload); }
  const KitchenState& kitchen() const { return std::get<KitchenState>(payload); }
  const ShoeboxState& shoebox() const { return std::get<ShoeboxState>(payload); }

  friend bool operator==(const SceneState&, const SceneState&) = default;
};

SceneState make_state(BlocksworldState s);
SceneState make_state(SlidingTileState s);
SceneState make_state(KitchenState s);
SceneState make_state(ShoeboxState s);

/// Sorts whatever has a canonical order (stacks, items, elements).
SceneState canonical(SceneState s);

/// Full invariant check: unique names, tile multiset, single occupancy,
/// injective assignment, no location posing as a kitchen item.
Result<void> validate_state(const SceneState& s);

/// Lifts a scene into ground atoms (including derivable atoms: clear,
/// arm-empty, blank, and the static inc/dec grid atoms).
std::vector<pddl::Atom> to_predicates(const SceneState& s);

/// Inverse of to_predicates on consistent atom sets.
Result<SceneState> from_predicates(DomainId domain, const std::vector<pddl::Atom>& atoms);

/// Tolerant parse: scans prose for the first well-formed state block.
Result<SceneState> parse_state_format(DomainId domain, const std::string& text);

/// Canonical line-oriented text form; parse_state_format round-trips it.
std::string serialize_state_format(const SceneState& s);

/// true iff a plan from init to goal exists. Exact parity check for the
/// sliding tile domain; capacity checks for the others.
Result<bool> is_solvable(const SceneState& init, const SceneState& goal);

/// PDDL object declarations implied by the scene (blocks, tiles/positions,
/// items/locations, elements).
std::vector<pddl::TypedName> object_declarations(const SceneState& s);

/// Ground-truth problem for an (init, goal) pair: init = to_predicates(init),
/// goal = to_predicates(goal) minus static grid atoms.
pddl::PddlProblem derive_problem(const std::string& name, const SceneState& init,
                                 const SceneState& goal);

/// Atoms that encode grid arithmetic rather than scene content.
bool is_static_atom(const pddl::Atom& atom);

// --- Kitchen fixtures -------------------------------------------------------

struct KitchenCatalogEntry {
  std::string name;
  std::string type;
  std::string detail;
};

/// The closed item world: lemon/apple (fruit), cutting_board, black_mug/
/// green_mug (mug), kettle, wine, cola/fanta (soda).
const std::vector<KitchenCatalogEntry>& kitchen_catalog();
const KitchenCatalogEntry* kitchen_catalog_find(const std::string& name);
const std::vector<std::string>& kitchen_locations();
bool is_kitchen_location(const std::string& name);

// --- Domain registry --------------------------------------------------------

/// Canonical PDDL domain text (embedded asset).
const std::string& domain_pddl_text(DomainId id);

/// Parsed and cached domain AST.
const pddl::PddlDomain& domain_ast(DomainId id);

}  // namespace scene2pddl::domains
