#include "lcgp/module_element.hpp"

#include "lcgp/errors.hpp"

namespace lcgp {

ModuleElement::ModuleElement(std::size_t rank, std::size_t nvars)
    : nvars_(nvars), comps_(rank, Polynomial(nvars)) {}

ModuleElement::ModuleElement(std::vector<Polynomial> components, std::size_t nvars)
    : nvars_(nvars), comps_(std::move(components)) {
  for (const auto& p : comps_)
    if (p.nvars() != nvars_) throw DimensionError("module element components over different rings");
}

ModuleElement ModuleElement::unit(std::size_t rank, std::size_t nvars, std::size_t i) {
  ModuleElement e(rank, nvars);
  e.comps_.at(i) = Polynomial(nvars, Rational(1));
  return e;
}

bool ModuleElement::is_zero() const {
  for (const auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<ModuleTerm> ModuleElement::terms() const {
  std::vector<ModuleTerm> out;
  for (std::size_t c = 0; c < comps_.size(); ++c)
    for (const auto& [m, coeff] : comps_[c].terms()) out.push_back({c, m, coeff});
  return out;
}

void ModuleElement::check_compatible(const ModuleElement& other) const {
  if (rank() != other.rank() || nvars_ != other.nvars_)
    throw DimensionError("module elements of different free modules");
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& rhs) {
  check_compatible(rhs);
  for (std::size_t c = 0; c < comps_.size(); ++c) comps_[c] += rhs.comps_[c];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& rhs) {
  check_compatible(rhs);
  for (std::size_t c = 0; c < comps_.size(); ++c) comps_[c] -= rhs.comps_[c];
  return *this;
}

ModuleElement operator*(const Polynomial& p, const ModuleElement& m) {
  ModuleElement out = m;
  for (auto& c : out.comps_) c = p * c;
  return out;
}

ModuleElement operator*(const Rational& q, const ModuleElement& m) {
  ModuleElement out = m;
  for (auto& c : out.comps_) c *= q;
  return out;
}

ModuleTerm module_leading_term(const ModuleElement& m, const MonomialOrder& ord) {
  if (m.is_zero()) throw std::invalid_argument("leading term of the zero element");
  const ModuleTerm* best = nullptr;
  auto terms = m.terms();
  for (const auto& t : terms)
    if (!best || ord.compare(t.component, t.monomial, best->component, best->monomial) > 0)
      best = &t;
  return *best;
}

ModuleElement linear_combination(const std::vector<Polynomial>& coeffs,
                                 const std::vector<ModuleElement>& elems, std::size_t rank,
                                 std::size_t nvars) {
  if (coeffs.size() != elems.size()) throw DimensionError("coefficient count mismatch");
  ModuleElement sum(rank, nvars);
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (!coeffs[i].is_zero()) sum += coeffs[i] * elems[i];
  return sum;
}

}  // namespace lcgp
