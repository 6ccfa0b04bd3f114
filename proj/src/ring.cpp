#include "lcgp/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "lcgp/errors.hpp"

namespace lcgp {

std::string to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::Differentiate: return "diff";
    case ActionKind::Multiply: return "mul";
    case ActionKind::Shift: return "shift";
  }
  return "?";
}

ActionKind parse_action_kind(const std::string& word) {
  if (word == "diff") return ActionKind::Differentiate;
  if (word == "mul") return ActionKind::Multiply;
  if (word == "shift") return ActionKind::Shift;
  throw std::invalid_argument("unknown action '" + word + "' (expected diff, mul or shift)");
}

namespace {

void check_names(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw std::invalid_argument(std::string("invalid ") + what + " name '" + n + "'");
    if (!seen.insert(n).second)
      throw std::invalid_argument(std::string("duplicate ") + what + " name '" + n + "'");
  }
}

}  // namespace

Ring::Ring(std::vector<std::string> generators, std::vector<std::string> coordinates,
           std::vector<Action> actions)
    : generators_(std::move(generators)),
      coordinates_(std::move(coordinates)),
      actions_(std::move(actions)) {
  check_names(generators_, "generator");
  check_names(coordinates_, "coordinate");
  if (actions_.size() != generators_.size())
    throw DimensionError("one action per generator required");
  for (const auto& a : actions_)
    if (a.coordinate >= coordinates_.size())
      throw DimensionError("action refers to a missing coordinate");
  for (std::size_t c = 0; c < coordinates_.size(); ++c) {
    bool diff = false, mul = false;
    for (const auto& a : actions_) {
      if (a.coordinate != c) continue;
      diff |= a.kind == ActionKind::Differentiate || a.kind == ActionKind::Shift;
      mul |= a.kind == ActionKind::Multiply;
    }
    if (diff && mul)
      throw std::invalid_argument("coordinate '" + coordinates_[c] +
                                  "' is both multiplied and differentiated/shifted; "
                                  "those generators do not commute");
  }
}

Ring Ring::differential(std::vector<std::string> generators, std::vector<std::string> coordinates) {
  std::vector<Action> actions;
  for (std::size_t i = 0; i < generators.size(); ++i)
    actions.push_back({ActionKind::Differentiate, i});
  return Ring(std::move(generators), std::move(coordinates), std::move(actions));
}

std::optional<std::size_t> Ring::generator_index(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

std::optional<std::size_t> Ring::coordinate_index(const std::string& name) const {
  auto it = std::find(coordinates_.begin(), coordinates_.end(), name);
  if (it == coordinates_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - coordinates_.begin());
}

}  // namespace lcgp
