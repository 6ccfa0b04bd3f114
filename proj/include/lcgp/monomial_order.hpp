#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "lcgp/monomial.hpp"

namespace lcgp {

enum class BaseOrder { DegRevLex, Lex };

/// How a monomial order is extended to the free module R^s.
enum class ModuleExtension {
  TermOverPosition,  ///< compare monomials first, components break ties
  PositionOverTerm,  ///< compare components first
};

/// Module monomial order: base order, extension, and component priority.
///
/// `priority` lists components from most to least significant; components
/// not mentioned rank after all listed ones, in increasing index order.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(BaseOrder base, ModuleExtension ext,
                std::vector<std::size_t> priority = {});

  static MonomialOrder degrevlex_top() { return {}; }
  static MonomialOrder degrevlex_pot() {
    return {BaseOrder::DegRevLex, ModuleExtension::PositionOverTerm};
  }

  BaseOrder base() const { return base_; }
  ModuleExtension extension() const { return ext_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::strong_ordering compare(std::size_t comp_a, const Monomial& a,
                               std::size_t comp_b, const Monomial& b) const;

  /// Rank of a component; lower rank means more significant.
  std::size_t rank(std::size_t component) const;

  /// Same base order with a new extension and priority.
  MonomialOrder with_extension(ModuleExtension ext,
                               std::vector<std::size_t> priority = {}) const {
    return {base_, ext, std::move(priority)};
  }

 private:
  BaseOrder base_ = BaseOrder::DegRevLex;
  ModuleExtension ext_ = ModuleExtension::TermOverPosition;
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> rank_;
};

}  // namespace lcgp
