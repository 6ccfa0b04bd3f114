#pragma once

// Helpers shared by the unit tests and the acceptance runner: random
// inputs, a brute-force linear-algebra syzygy oracle, and finite
// differences.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lcgp/gp.hpp"
#include "lcgp/groebner.hpp"
#include "lcgp/operator_matrix.hpp"
#include "lcgp/ore.hpp"

namespace lcgp::testing {

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t nvars, int max_degree,
                                    int max_terms, int coeff_range = 3) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Polynomial p(nvars);
  for (int t = nterms(rng); t > 0; --t) {
    std::vector<int> e(nvars, 0);
    for (int d = deg(rng); d > 0; --d) ++e[var(rng)];
    p.add_term(Monomial(e), Rational(coeff(rng)));
  }
  return p;
}

inline ModuleElement random_element(std::mt19937& rng, std::size_t rank, std::size_t nvars,
                                    int max_degree, int max_terms) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < rank; ++i)
    comps.push_back(random_polynomial(rng, nvars, max_degree, max_terms));
  return ModuleElement(comps, nvars);
}

inline ore::UPoly random_upoly(std::mt19937& rng, int max_degree, int range = 4) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Rational> c;
  for (int d = deg(rng); d >= 0; --d) c.push_back(Rational(coeff(rng)));
  return ore::UPoly(c);
}

inline ore::RatFunc random_ratfunc(std::mt19937& rng, int max_degree) {
  ore::UPoly den;
  while (den.is_zero()) den = random_upoly(rng, 1);
  return ore::RatFunc(random_upoly(rng, max_degree), den);
}

/// Coefficients are polynomials in t when `polynomial` is set.
inline ore::SkewPoly random_skew(std::mt19937& rng, int max_order, int max_degree,
                                 bool polynomial = false) {
  std::uniform_int_distribution<int> order(-1, max_order);
  std::vector<ore::RatFunc> c;
  for (int i = order(rng); i >= 0; --i)
    c.push_back(polynomial ? ore::RatFunc(random_upoly(rng, max_degree))
                           : random_ratfunc(rng, max_degree));
  return ore::SkewPoly(c);
}

/// All exponent vectors in `nvars` variables of total degree <= `degree`.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == nvars) {
      out.emplace_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, degree);
  return out;
}

/// Basis of the nullspace of a dense rational matrix (exact Gauss-Jordan).
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m,
                                                    std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Every syzygy of the columns of `a` with entries of degree <= `degree`,
/// as a Q-basis of that finite-dimensional space. Pure linear algebra: the
/// unknowns are the coefficients of the syzygy entries.
inline std::vector<ModuleElement> brute_force_syzygies(const OperatorMatrix& a, int degree) {
  const std::size_t n = a.nvars();
  const auto monos = monomials_up_to(n, degree);
  int entry_degree = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) entry_degree = std::max(entry_degree, a(i, j).total_degree());
  const auto targets = monomials_up_to(n, degree + entry_degree);
  auto target_index = [&](const Monomial& m) {
    for (std::size_t k = 0; k < targets.size(); ++k)
      if (targets[k] == m) return k;
    return targets.size();
  };
  const std::size_t unknowns = a.cols() * monos.size();
  std::vector<std::vector<Rational>> eqs(a.rows() * targets.size(),
                                         std::vector<Rational>(unknowns, Rational(0)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const auto& [am, ac] : a(i, j).terms())
        for (std::size_t k = 0; k < monos.size(); ++k)
          eqs[i * targets.size() + target_index(am * monos[k])][j * monos.size() + k] += ac;
  std::vector<ModuleElement> out;
  for (const auto& v : nullspace(std::move(eqs), unknowns)) {
    ModuleElement m(a.cols(), n);
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (v[j * monos.size() + k] != 0) m[j].add_term(monos[k], v[j * monos.size() + k]);
    out.push_back(std::move(m));
  }
  return out;
}

using Field = std::function<double(const std::vector<double>&)>;

/// Applies a commutative operator to a scalar function numerically:
/// central differences for diff, multiplication for mul, translation for
/// shift.
inline Field apply_numeric(const Polynomial& op, const std::vector<Action>& actions, Field f,
                           double h = 1e-3, double shift_step = 1.0) {
  Field sum = [](const std::vector<double>&) { return 0.0; };
  for (const auto& [mono, c] : op.terms()) {
    Field g = f;
    for (std::size_t v = 0; v < actions.size(); ++v)
      for (int k = 0; k < mono[v]; ++k) {
        const std::size_t x = actions[v].coordinate;
        switch (actions[v].kind) {
          case ActionKind::Differentiate:
            g = [g, x, h](const std::vector<double>& p) {
              auto a = p, b = p;
              a[x] += h;
              b[x] -= h;
              return (g(a) - g(b)) / (2 * h);
            };
            break;
          case ActionKind::Multiply:
            g = [g, x](const std::vector<double>& p) { return p[x] * g(p); };
            break;
          case ActionKind::Shift:
            g = [g, x, shift_step](const std::vector<double>& p) {
              auto a = p;
              a[x] += shift_step;
              return g(a);
            };
            break;
        }
      }
    const double cd = c.get_d();
    sum = [sum, g, cd](const std::vector<double>& p) { return sum(p) + cd * g(p); };
  }
  return sum;
}

/// Applies sum_i c_i(t) dt^i to a function of one variable numerically.
inline Field apply_numeric(const ore::SkewPoly& op, Field f, double h = 1e-3) {
  return [op, f, h](const std::vector<double>& p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < op.coeffs().size(); ++i) {
      if (op.coeffs()[i].is_zero()) continue;
      // i-th central difference
      double d = 0.0;
      double binom = 1.0;
      for (std::size_t k = 0; k <= i; ++k) {
        const double offset = (static_cast<double>(i) / 2.0 - static_cast<double>(k)) * h;
        d += ((k % 2) ? -binom : binom) * f({p[0] + offset});
        binom = binom * static_cast<double>(i - k) / static_cast<double>(k + 1);
      }
      d /= std::pow(h, static_cast<double>(i));
      const auto& c = op.coeffs()[i];
      sum += c.num().evaluate(p[0]) / c.den().evaluate(p[0]) * d;
    }
    return sum;
  };
}

/// Points of the uniform grid with `n` values per axis on [lo, hi]^d.
inline std::vector<std::vector<double>> grid(std::size_t d, std::size_t n, double lo, double hi) {
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    std::vector<double> p(d);
    for (std::size_t k = 0; k < d; ++k)
      p[k] = lo + (hi - lo) * static_cast<double>(idx[k]) / static_cast<double>(n - 1);
    out.push_back(std::move(p));
    std::size_t k = d;
    while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace lcgp::testing
