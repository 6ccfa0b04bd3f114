#include "lcgp/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "lcgp/errors.hpp"

namespace lcgp {

Monomial::Monomial(std::vector<int> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::with_exponent(std::size_t i, int e) const {
  Monomial m = *this;
  m.degree_ += e - m.exps_.at(i);
  m.exps_[i] = e;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DimensionError("monomials over different rings");
  Monomial m = a;
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] += b.exps_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DimensionError("monomials over different rings");
  Monomial m = a;
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] -= b.exps_[i];
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  int deg = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += m.exps_[i];
  }
  m.degree_ = deg;
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
  return true;
}

}  // namespace lcgp
