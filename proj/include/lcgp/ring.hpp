#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lcgp {

/// How a ring generator acts on functions of the coordinates.
enum class ActionKind { Differentiate, Multiply, Shift };

struct Action {
  ActionKind kind = ActionKind::Differentiate;
  std::size_t coordinate = 0;

  friend bool operator==(const Action&, const Action&) = default;
};

std::string to_string(ActionKind kind);
ActionKind parse_action_kind(const std::string& word);

/// Commutative operator ring Q[g_1, ..., g_n] acting on functions of the
/// coordinates x_1, ..., x_d. Immutable once built.
class Ring {
 public:
  Ring() = default;
  /// Validates uniqueness of names and that no coordinate is both
  /// differentiated and multiplied (those generators would not commute).
  Ring(std::vector<std::string> generators, std::vector<std::string> coordinates,
       std::vector<Action> actions);

  /// Generators d1..dn acting by differentiation on x1..xn.
  static Ring differential(std::vector<std::string> generators,
                           std::vector<std::string> coordinates);

  std::size_t nvars() const { return generators_.size(); }
  std::size_t dimension() const { return coordinates_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<std::string>& coordinates() const { return coordinates_; }
  const std::vector<Action>& actions() const { return actions_; }

  std::optional<std::size_t> generator_index(const std::string& name) const;
  std::optional<std::size_t> coordinate_index(const std::string& name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<std::string> coordinates_;
  std::vector<Action> actions_;
};

}  // namespace lcgp
