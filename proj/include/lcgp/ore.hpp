#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lcgp/expr.hpp"
#include "lcgp/matrix.hpp"
#include "lcgp/rational.hpp"

namespace lcgp::ore {

/// Dense univariate polynomial over Q; coefficient i belongs to t^i.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c) { if (c != 0) coeffs_.push_back(c); }  // NOLINT: implicit on purpose
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly t(int power = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational lead() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  /// True if the polynomial is c * t^k.
  bool is_monomial() const;

  UPoly derivative() const;
  UPoly monic() const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// a = q * b + r with deg r < deg b.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// Element of Q(t) in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(const UPoly& p) : num_(p), den_(Rational(1)) {}     // NOLINT
  RatFunc(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc derivative() const;
  RatFunc inverse() const;
  Rational evaluate(const Rational& x) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  UPoly num_;
  UPoly den_;
};

/// Element of Q(t)<dt> with dt * t = t * dt + 1, written with coefficients
/// on the left: sum_i c_i(t) dt^i.
class SkewPoly {
 public:
  SkewPoly() = default;
  SkewPoly(const RatFunc& c) { if (!c.is_zero()) coeffs_.push_back(c); }  // NOLINT
  SkewPoly(const Rational& c) : SkewPoly(RatFunc(c)) {}                    // NOLINT
  explicit SkewPoly(std::vector<RatFunc> coeffs);

  static SkewPoly dt(int power = 1);
  static SkewPoly t(int power = 1) { return RatFunc(UPoly::t(power)); }

  /// Degree in dt; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  RatFunc coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : RatFunc(); }
  RatFunc lead() const { return coeffs_.empty() ? RatFunc() : coeffs_.back(); }

  SkewPoly& operator+=(const SkewPoly& rhs);
  SkewPoly& operator-=(const SkewPoly& rhs);
  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
  friend SkewPoly operator-(const SkewPoly& a);
  /// Noncommutative product.
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

 private:
  void trim();
  std::vector<RatFunc> coeffs_;
};

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b);

struct Division {
  SkewPoly quotient;
  SkewPoly remainder;
};

/// a = q * b + r, deg r < deg b. Throws std::domain_error if b = 0.
Division right_divide(const SkewPoly& a, const SkewPoly& b);
/// a = b * q + r, deg r < deg b. Throws std::domain_error if b = 0.
Division left_divide(const SkewPoly& a, const SkewPoly& b);

using SkewMatrix = Matrix<SkewPoly>;

inline SkewMatrix skew_matrix(std::size_t rows, std::size_t cols) {
  return SkewMatrix(rows, cols, SkewPoly());
}
SkewMatrix skew_identity(std::size_t n);

/// Columns generate {b : A b = 0} (closed under right multiplication).
/// Computed by unimodular column operations that bring A to column echelon
/// form; the trailing columns of the transformation span the kernel.
SkewMatrix ore_right_kernel(const SkewMatrix& a);

/// Rows generate {m : m B = 0}, by unimodular row operations.
SkewMatrix ore_left_kernel(const SkewMatrix& b);

/// Is `row` in the left module generated by the rows of `rows`?
bool ore_row_member(const std::vector<SkewPoly>& row, const SkewMatrix& rows);
bool ore_same_row_module(const SkewMatrix& a, const SkewMatrix& b);

struct OreReport {
  SkewMatrix parametrization;
  SkewMatrix controllable;
  bool parametrizable = false;
};

OreReport ore_check_parametrizable(const SkewMatrix& a);

/// Text form, e.g. `t^3*dt + 3*t^2` or `(1)/(t^3)*dt`.
std::string to_string(const UPoly& p, const std::string& t = "t");
std::string to_string(const RatFunc& f, const std::string& t = "t");
std::string to_string(const SkewPoly& p, const std::string& t = "t", const std::string& d = "dt");
std::string to_string(const SkewMatrix& m, const std::string& t = "t", const std::string& d = "dt");

SkewPoly to_skew(const expr::Node& node, const std::string& t = "t", const std::string& d = "dt");
SkewPoly parse_skew(std::string_view text, const std::string& t = "t",
                    const std::string& d = "dt", std::size_t line = 1, std::size_t column = 1);
SkewMatrix parse_skew_matrix(std::string_view text, const std::string& t = "t",
                             const std::string& d = "dt");

}  // namespace lcgp::ore
