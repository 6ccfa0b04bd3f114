#pragma once

#include <cstddef>
#include <functional>
#include <map>

#include "lcgp/monomial.hpp"
#include "lcgp/rational.hpp"

namespace lcgp {

/// Sparse multivariate polynomial over Q in a fixed number of generators.
///
/// Terms live in a map keyed by exponent vector, so the representation is
/// canonical: no zero coefficients and a unique term order independent of
/// any monomial order used by the Groebner code.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& constant);

  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  /// Constant term.
  Rational constant() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Highest exponent of generator `i`, lowest if `lowest` is set.
  int degree_in(std::size_t i, bool lowest = false) const;
  bool has_negative_exponents() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);

  Polynomial pow(unsigned n) const;
  Polynomial times_monomial(const Monomial& m) const;

  /// d/dx_i, valid for Laurent exponents as well.
  Polynomial derivative(std::size_t i) const;
  /// Substitutes x_i -> x_i + step. Requires non-negative exponents in x_i.
  Polynomial shifted(std::size_t i, const Rational& step) const;
  /// Reorders generators: generator i of the result is generator perm[i] of this.
  Polynomial permuted(const std::vector<std::size_t>& perm) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate(const double* point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  /// Total order on canonical forms so polynomials can key ordered maps.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_ring(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace lcgp
