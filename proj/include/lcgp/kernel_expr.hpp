#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcgp/expr.hpp"
#include "lcgp/matrix.hpp"
#include "lcgp/operator_matrix.hpp"
#include "lcgp/ore.hpp"
#include "lcgp/polynomial.hpp"

namespace lcgp {

/// Scalar covariance expression in x_1..x_d and x'_1..x'_d.
///
/// Canonical form: a sum over distinct exponent arguments p of
/// L_p(x, x') * exp(p(x, x')), where p is a polynomial and L_p a Laurent
/// polynomial (monomial denominators only). Variables are numbered
/// 0..d-1 for x and d..2d-1 for x'. Equal expressions in this class have
/// equal canonical forms as long as no two arguments differ by a constant.
class KernelExpr {
 public:
  using Groups = std::map<Polynomial, Polynomial>;  // argument -> coefficient

  KernelExpr() = default;
  explicit KernelExpr(std::size_t dim) : dim_(dim) {}

  static KernelExpr constant(std::size_t dim, const Rational& c);
  static KernelExpr variable(std::size_t dim, std::size_t coordinate, bool primed);
  /// Laurent polynomial in the 2d variables.
  static KernelExpr from_polynomial(std::size_t dim, const Polynomial& coeff);
  /// exp(arg) for a polynomial argument in the 2d variables.
  static KernelExpr exp(std::size_t dim, const Polynomial& arg);

  std::size_t dim() const { return dim_; }
  std::size_t nvars() const { return 2 * dim_; }
  bool is_zero() const { return groups_.empty(); }
  const Groups& groups() const { return groups_; }
  std::size_t term_count() const;

  KernelExpr& operator+=(const KernelExpr& rhs);
  KernelExpr& operator-=(const KernelExpr& rhs);
  friend KernelExpr operator+(KernelExpr a, const KernelExpr& b) { return a += b; }
  friend KernelExpr operator-(KernelExpr a, const KernelExpr& b) { return a -= b; }
  friend KernelExpr operator-(const KernelExpr& a);
  friend KernelExpr operator*(const KernelExpr& a, const KernelExpr& b);
  friend KernelExpr operator*(const Rational& c, const KernelExpr& a);

  KernelExpr pow(unsigned n) const;
  /// Multiplication by a Laurent polynomial in the 2d variables.
  KernelExpr times(const Polynomial& laurent) const;

  /// Partial derivative with respect to variable `var` (0..2d-1).
  KernelExpr derivative(std::size_t var) const;
  /// Substitutes var -> var + step; rejects negative powers of var.
  KernelExpr shifted(std::size_t var, const Rational& step) const;
  /// Exchanges x and x'.
  KernelExpr swapped() const;

  /// Exact evaluation: one (coefficient value, argument value) pair per group.
  std::vector<std::pair<Rational, Rational>> evaluate_groups(const std::vector<Rational>& point) const;
  /// Long-double evaluation of the exact group values.
  long double evaluate_exact(const std::vector<Rational>& point) const;

  friend bool operator==(const KernelExpr&, const KernelExpr&) = default;

 private:
  void add_group(const Polynomial& arg, const Polynomial& coeff);

  std::size_t dim_ = 0;
  Groups groups_;
};

using MatrixKernel = Matrix<KernelExpr>;

/// Names used for printing/parsing: coordinate c becomes c1 (unprimed) and
/// c2 (primed), e.g. x1, y1, z1, x2, y2, z2.
std::vector<std::string> kernel_variable_names(const std::vector<std::string>& coordinates);

std::string to_string(const KernelExpr& e, const std::vector<std::string>& names);
std::string to_string(const MatrixKernel& k, const std::vector<std::string>& names);

/// Parses `+ - * / ^`, integers/rationals and `exp(...)` into canonical form.
KernelExpr to_kernel(const expr::Node& node, const std::vector<std::string>& names);
KernelExpr parse_kernel(std::string_view text, const std::vector<std::string>& names);

/// variance * exp(-sum_i (x_i - x'_i)^2 / (2 lengthscale^2)).
KernelExpr se_kernel(std::size_t dim, const Rational& lengthscale, const Rational& variance);

enum class Side { Unprimed, Primed };

/// Lets the commutative operator `op` act on one argument of `e`; generator
/// i acts according to `actions[i]`.
KernelExpr apply_operator(const KernelExpr& e, const Polynomial& op, Side side,
                          const std::vector<Action>& actions, const Rational& shift_step = 1);

/// Lets sum_i c_i(t) dt^i act on coordinate `coordinate` of one argument.
/// Coefficients must have monomial denominators.
KernelExpr apply_operator(const KernelExpr& e, const ore::SkewPoly& op, Side side,
                          std::size_t coordinate = 0);

/// Entry (i, j) = sum_c B_ic B'_jc k_c for mutually uncorrelated latent
/// processes with covariances `latent[c]`.
MatrixKernel pushforward_covariance(const OperatorMatrix& b, const std::vector<KernelExpr>& latent,
                                    const Rational& shift_step = 1);
MatrixKernel pushforward_covariance(const ore::SkewMatrix& b, const std::vector<KernelExpr>& latent,
                                    std::size_t coordinate = 0);

/// True iff A, acting on the unprimed argument, annihilates every column of K.
bool annihilation_check(const OperatorMatrix& a, const MatrixKernel& k,
                        const Rational& shift_step = 1);
bool annihilation_check(const ore::SkewMatrix& a, const MatrixKernel& k,
                        std::size_t coordinate = 0);

/// K(x, x')_ij == K(x', x)_ji for all entries, symbolically.
bool is_symmetric(const MatrixKernel& k);

/// Numeric evaluator for a symbolic matrix kernel. Immutable; safe to call
/// concurrently.
class CompiledKernel {
 public:
  CompiledKernel() = default;
  explicit CompiledKernel(const MatrixKernel& k);

  std::size_t dim() const { return dim_; }
  std::size_t outputs() const { return outputs_; }

  /// K(x, x')_{ci, cj}; throws PoleError at a zero of a denominator.
  double operator()(const double* x, std::size_t ci, const double* xp, std::size_t cj) const;
  double operator()(const std::vector<double>& x, std::size_t ci, const std::vector<double>& xp,
                    std::size_t cj) const {
    return (*this)(x.data(), ci, xp.data(), cj);
  }

 private:
  struct Term {
    double coeff;
    std::vector<std::pair<std::size_t, int>> factors;  // (variable, exponent)
  };
  struct Group {
    std::vector<Term> coeff;
    std::vector<Term> arg;
  };

  static double eval(const std::vector<Term>& terms, const double* vars);

  std::size_t dim_ = 0;
  std::size_t outputs_ = 0;
  std::vector<std::vector<Group>> entries_;  // row-major outputs x outputs
};

CompiledKernel compile_evaluator(const MatrixKernel& k);

}  // namespace lcgp
