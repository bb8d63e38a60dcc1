#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "scene2pddl/scene.hpp"

namespace scene2pddl::domains {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> words(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

/// Normalized input lines: trimmed, lowercased, fences and blanks dropped.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::string t = lower(trim(line));
    if (t.empty() || t.starts_with("```")) continue;
    out.push_back(std::move(t));
  }
  return out;
}

Result<SceneState> unparseable(const std::string& detail) {
  return fail<SceneState>("UNPARSEABLE_STATE", detail);
}

// --- blocksworld ------------------------------------------------------------

Result<SceneState> parse_blocksworld(const std::vector<std::string>& lines) {
  BlocksworldState state;
  bool started = false;
  std::set<std::string> seen;
  for (const std::string& line : lines) {
    auto w = words(line);
    if (!w.empty() && w[0] == "stack:") {
      if (w.size() < 2) return unparseable("empty stack line: '" + line + "'");
      std::vector<std::string> stack(w.begin() + 1, w.end());
      for (const std::string& b : stack) {
        if (!seen.insert(b).second) {
          return unparseable("block '" + b + "' listed twice");
        }
      }
      state.stacks.push_back(std::move(stack));
      started = true;
    } else if (!w.empty() && w[0] == "arm:") {
      if (w.size() == 2 && w[1] == "empty") {
        started = true;
        continue;
      }
      return unparseable("unsupported arm state: '" + line + "'");
    } else if (started) {
      break;  // end of the state block
    }
  }
  if (state.stacks.empty()) return unparseable("no stack lines found");
  return make_state(std::move(state));
}

std::string serialize_blocksworld(const BlocksworldState& b) {
  std::string out;
  for (const auto& stack : b.stacks) {
    out += "stack:";
    for (const std::string& block : stack) {
      out += ' ';
      out += block;
    }
    out += '\n';
  }
  out += "arm: empty\n";
  return out;
}

// --- sliding tile -----------------------------------------------------------

Result<SceneState> parse_sliding_tile(const std::vector<std::string>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto w = words(lines[i]);
    if (w.size() != 2 || w[0] != "grid") continue;
    const std::size_t x = w[1].find('x');
    if (x == std::string::npos) continue;
    int width = 0;
    int height = 0;
    try {
      width = std::stoi(w[1].substr(0, x));
      height = std::stoi(w[1].substr(x + 1));
    } catch (const std::exception&) {
      continue;
    }
    if (width < 2 || width > 16 || height < 2 || height > 16) {
      return unparseable("unsupported grid size '" + w[1] + "'");
    }
    SlidingTileState state;
    state.width = width;
    state.height = height;
    std::size_t row_line = i + 1;
    for (int y = 0; y < height; ++y, ++row_line) {
      if (row_line >= lines.size()) return unparseable("grid has fewer rows than declared");
      auto row = words(lines[row_line]);
      if (static_cast<int>(row.size()) != width) {
        return unparseable("grid row has wrong width: '" + lines[row_line] + "'");
      }
      for (const std::string& tok : row) {
        if (tok == "_" || tok == "0" || tok == "blank") {
          state.cells.push_back(0);
        } else {
          int v = 0;
          for (char c : tok) {
            if (c < '0' || c > '9') return unparseable("bad tile token '" + tok + "'");
            v = v * 10 + (c - '0');
          }
          state.cells.push_back(v);
        }
      }
    }
    SceneState out = make_state(std::move(state));
    if (auto check = validate_state(out); !check.ok()) {
      return unparseable(check.error().message);
    }
    return out;
  }
  return unparseable("no grid header found");
}

std::string serialize_sliding_tile(const SlidingTileState& t) {
  std::string out = "grid " + std::to_string(t.width) + "x" + std::to_string(t.height) + "\n";
  for (int y = 1; y <= t.height; ++y) {
    for (int x = 1; x <= t.width; ++x) {
      if (x > 1) out += ' ';
      const int v = t.cell(x, y);
      out += v == 0 ? std::string("_") : std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

// --- kitchen ----------------------------------------------------------------

// `<name> (<type>[, <detail>]) at <location>`
std::optional<KitchenItem> match_kitchen_line(const std::string& line) {
  const std::size_t open = line.find('(');
  const std::size_t close = line.find(')', open == std::string::npos ? 0 : open);
  if (open == std::string::npos || close == std::string::npos) return std::nullopt;
  KitchenItem item;
  item.name = trim(line.substr(0, open));
  if (item.name.empty() || item.name.find(' ') != std::string::npos) return std::nullopt;
  std::string inner = line.substr(open + 1, close - open - 1);
  const std::size_t comma = inner.find(',');
  if (comma == std::string::npos) {
    item.type = trim(inner);
  } else {
    item.type = trim(inner.substr(0, comma));
    item.detail = trim(inner.substr(comma + 1));
  }
  if (item.type.empty() || item.type.find(' ') != std::string::npos) return std::nullopt;
  auto rest = words(line.substr(close + 1));
  if (rest.size() != 2 || rest[0] != "at") return std::nullopt;
  item.location = rest[1];
  return item;
}

Result<SceneState> parse_kitchen(const std::vector<std::string>& lines) {
  KitchenState state;
  bool started = false;
  std::set<std::string> seen;
  for (const std::string& line : lines) {
    auto item = match_kitchen_line(line);
    if (!item.has_value()) {
      if (started) break;
      continue;
    }
    if (!is_kitchen_location(item->location)) {
      return unparseable("unknown kitchen location '" + item->location + "'");
    }
    if (!seen.insert(item->name).second) {
      return unparseable("item '" + item->name + "' listed twice");
    }
    state.items.push_back(std::move(*item));
    started = true;
  }
  if (state.items.empty()) return unparseable("no item lines found");
  return make_state(std::move(state));
}

std::string serialize_kitchen(const KitchenState& k) {
  std::string out;
  for (const KitchenItem& item : k.items) {
    out += item.name;
    out += " (";
    out += item.type;
    if (!item.detail.empty()) {
      out += ", ";
      out += item.detail;
    }
    out += ") at ";
    out += item.location;
    out += '\n';
  }
  return out;
}

// --- shoebox ----------------------------------------------------------------

Result<SceneState> parse_shoebox(const std::vector<std::string>& lines) {
  ShoeboxState state;
  std::set<std::string> elements;
  std::set<std::string> locations;
  bool started = false;
  for (const std::string& line : lines) {
    auto w = words(line);
    if (!w.empty() && w[0] == "locations:") {
      for (std::size_t i = 1; i < w.size(); ++i) locations.insert(w[i]);
      started = true;
    } else if (w.size() == 4 && w[0] == "element" && w[2] == "at") {
      if (!elements.insert(w[1]).second) {
        return unparseable("element '" + w[1] + "' listed twice");
      }
      state.assignment[w[1]] = w[3];
      locations.insert(w[3]);
      started = true;
    } else if (w.size() == 3 && w[0] == "element" && w[2] == "unplaced") {
      if (!elements.insert(w[1]).second) {
        return unparseable("element '" + w[1] + "' listed twice");
      }
      started = true;
    } else if (started) {
      break;
    }
  }
  if (elements.empty()) return unparseable("no element lines found");
  state.elements.assign(elements.begin(), elements.end());
  state.locations.assign(locations.begin(), locations.end());
  return make_state(std::move(state));
}

std::string serialize_shoebox(const ShoeboxState& sb) {
  std::string out = "locations:";
  for (const std::string& loc : sb.locations) {
    out += ' ';
    out += loc;
  }
  out += '\n';
  for (const std::string& element : sb.elements) {
    out += "element ";
    out += element;
    const auto it = sb.assignment.find(element);
    if (it == sb.assignment.end()) {
      out += " unplaced\n";
    } else {
      out += " at ";
      out += it->second;
      out += '\n';
    }
  }
  return out;
}

}  // namespace

Result<SceneState> parse_state_format(DomainId domain, const std::string& text) {
  const auto lines = content_lines(text);
  switch (domain) {
    case DomainId::kBlocksworld: return parse_blocksworld(lines);
    case DomainId::kSlidingTile: return parse_sliding_tile(lines);
    case DomainId::kKitchen: return parse_kitchen(lines);
    case DomainId::kShoebox: return parse_shoebox(lines);
  }
  std::abort();
}

std::string serialize_state_format(const SceneState& s) {
  const SceneState c = canonical(s);
  switch (c.domain) {
    case DomainId::kBlocksworld: return serialize_blocksworld(c.blocksworld());
    case DomainId::kSlidingTile: return serialize_sliding_tile(c.sliding_tile());
    case DomainId::kKitchen: return serialize_kitchen(c.kitchen());
    case DomainId::kShoebox: return serialize_shoebox(c.shoebox());
  }
  std::abort();
}

}  // namespace scene2pddl::domains
