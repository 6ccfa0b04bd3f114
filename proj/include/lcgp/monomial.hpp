#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace lcgp {

/// Exponent vector over a fixed list of generators.
///
/// Exponents are signed so the same type carries Laurent monomials in the
/// symbolic kernel code; operator-ring polynomials only ever hold
/// non-negative exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_one() const;

  /// Componentwise `*this <= other`.
  bool divides(const Monomial& other) const;

  Monomial with_exponent(std::size_t i, int e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exponent difference; the caller guarantees divisibility when it matters.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  /// Plain lexicographic comparison of exponent vectors; used for storage
  /// only, never as a term order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

}  // namespace lcgp
