#include "lcgp/monomial_order.hpp"

#include <algorithm>

#include "lcgp/errors.hpp"

namespace lcgp {

MonomialOrder::MonomialOrder(BaseOrder base, ModuleExtension ext,
                             std::vector<std::size_t> priority)
    : base_(base), ext_(ext), priority_(std::move(priority)) {
  std::size_t max_comp = 0;
  for (std::size_t c : priority_) max_comp = std::max(max_comp, c + 1);
  rank_.assign(max_comp, static_cast<std::size_t>(-1));
  for (std::size_t r = 0; r < priority_.size(); ++r) {
    if (rank_[priority_[r]] != static_cast<std::size_t>(-1))
      throw std::invalid_argument("component priority lists a component twice");
    rank_[priority_[r]] = r;
  }
}

std::size_t MonomialOrder::rank(std::size_t component) const {
  if (component < rank_.size() && rank_[component] != static_cast<std::size_t>(-1))
    return rank_[component];
  // Unlisted components follow all listed ones, by index.
  return priority_.size() + component;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw DimensionError("monomials over different rings");
  if (base_ == BaseOrder::DegRevLex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(std::size_t comp_a, const Monomial& a,
                                            std::size_t comp_b, const Monomial& b) const {
  // A smaller rank is the larger position.
  auto by_position = [&] { return rank(comp_b) <=> rank(comp_a); };
  if (ext_ == ModuleExtension::PositionOverTerm) {
    if (comp_a != comp_b) return by_position();
    return compare(a, b);
  }
  if (auto c = compare(a, b); c != 0) return c;
  return comp_a == comp_b ? std::strong_ordering::equal : by_position();
}

}  // namespace lcgp
