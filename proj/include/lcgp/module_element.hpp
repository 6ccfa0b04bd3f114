#pragma once

#include <cstddef>
#include <vector>

#include "lcgp/monomial_order.hpp"
#include "lcgp/polynomial.hpp"

namespace lcgp {

struct ModuleTerm {
  std::size_t component;
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

/// Element of the free module R^s, stored as one polynomial per component.
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(std::size_t rank, std::size_t nvars);
  /// Takes `nvars` explicitly so rank-0 elements are well defined.
  ModuleElement(std::vector<Polynomial> components, std::size_t nvars);

  static ModuleElement unit(std::size_t rank, std::size_t nvars, std::size_t i);

  std::size_t rank() const { return comps_.size(); }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const;

  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  Polynomial& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }

  /// All terms, component-major.
  std::vector<ModuleTerm> terms() const;

  ModuleElement& operator+=(const ModuleElement& rhs);
  ModuleElement& operator-=(const ModuleElement& rhs);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Polynomial& p, const ModuleElement& m);
  friend ModuleElement operator*(const Rational& c, const ModuleElement& m);

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  void check_compatible(const ModuleElement& other) const;

  std::size_t nvars_ = 0;
  std::vector<Polynomial> comps_;
};

/// The order-maximal term of a nonzero element. Throws on zero.
ModuleTerm module_leading_term(const ModuleElement& m, const MonomialOrder& ord);

/// sum_i coeffs[i] * elems[i]; all elements share rank and ring.
ModuleElement linear_combination(const std::vector<Polynomial>& coeffs,
                                 const std::vector<ModuleElement>& elems,
                                 std::size_t rank, std::size_t nvars);

}  // namespace lcgp
