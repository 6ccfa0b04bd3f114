#include "lcgp/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "lcgp/errors.hpp"

namespace lcgp {

Polynomial::Polynomial(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
  if (constant != 0) terms_.emplace(Monomial(nvars), constant);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionError("generator index out of range");
  Polynomial p(nvars);
  p.terms_.emplace(Monomial::variable(nvars, index), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant() const { return coefficient(Monomial(nvars_)); }

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
  return deg;
}

int Polynomial::degree_in(std::size_t i, bool lowest) const {
  if (terms_.empty()) return 0;
  int best = terms_.begin()->first[i];
  for (const auto& [m, c] : terms_) best = lowest ? std::min(best, m[i]) : std::max(best, m[i]);
  return best;
}

bool Polynomial::has_negative_exponents() const {
  for (const auto& [m, c] : terms_)
    for (int e : m.exponents())
      if (e < 0) return true;
  return false;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw DimensionError("monomial has wrong generator count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw DimensionError("polynomials over " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " generators");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(nvars_, Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial out(nvars_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
  return out;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m[i];
    if (e == 0) continue;
    out.add_term(m.with_exponent(i, e - 1), c * e);
  }
  return out;
}

Polynomial Polynomial::shifted(std::size_t i, const Rational& step) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m[i];
    if (e < 0) throw UnsupportedError("shift of a negative power is not a Laurent polynomial");
    // (x + h)^e = sum_k C(e, k) x^k h^(e - k)
    Integer binom = 1;
    for (int k = e; k >= 0; --k) {
      // binom == C(e, k) here
      Rational hp = 1;
      for (int p = 0; p < e - k; ++p) hp *= step;
      out.add_term(m.with_exponent(i, k), c * Rational(binom) * hp);
      if (k > 0) {
        binom *= k;
        binom /= (e - k + 1);
      }
    }
  }
  return out;
}

Polynomial Polynomial::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != nvars_) throw DimensionError("permutation size mismatch");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = m[perm[i]];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      int e = m[i];
      if (e < 0 && point[i] == 0) throw PoleError("negative power at zero");
      Rational base = e < 0 ? Rational(1 / point[i]) : point[i];
      for (int k = 0; k < std::abs(e); ++k) v *= base;
    }
    sum += v;
  }
  return sum;
}

double Polynomial::evaluate(const double* point) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i)
      if (int e = m[i]; e != 0) v *= std::pow(point[i], e);
    sum += v;
  }
  return sum;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

}  // namespace lcgp
