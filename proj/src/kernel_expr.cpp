#include "lcgp/kernel_expr.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "lcgp/errors.hpp"
#include "lcgp/poly_io.hpp"

namespace lcgp {

namespace {

Polynomial zero_poly(std::size_t dim) { return Polynomial(2 * dim); }

}  // namespace

// ---- construction & arithmetic ---------------------------------------------

KernelExpr KernelExpr::constant(std::size_t dim, const Rational& c) {
  return from_polynomial(dim, Polynomial(2 * dim, c));
}

KernelExpr KernelExpr::variable(std::size_t dim, std::size_t coordinate, bool primed) {
  if (coordinate >= dim) throw DimensionError("kernel coordinate out of range");
  return from_polynomial(dim, Polynomial::variable(2 * dim, coordinate + (primed ? dim : 0)));
}

KernelExpr KernelExpr::from_polynomial(std::size_t dim, const Polynomial& coeff) {
  if (coeff.nvars() != 2 * dim) throw DimensionError("kernel coefficient over the wrong variables");
  KernelExpr e(dim);
  e.add_group(zero_poly(dim), coeff);
  return e;
}

KernelExpr KernelExpr::exp(std::size_t dim, const Polynomial& arg) {
  if (arg.nvars() != 2 * dim) throw DimensionError("exp argument over the wrong variables");
  if (arg.has_negative_exponents()) throw UnsupportedError("exp argument must be a polynomial");
  KernelExpr e(dim);
  e.add_group(arg, Polynomial(2 * dim, Rational(1)));
  return e;
}

std::size_t KernelExpr::term_count() const {
  std::size_t n = 0;
  for (const auto& [arg, coeff] : groups_) n += coeff.size();
  return n;
}

void KernelExpr::add_group(const Polynomial& arg, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = groups_.try_emplace(arg, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) groups_.erase(it);
  }
}

KernelExpr& KernelExpr::operator+=(const KernelExpr& rhs) {
  if (dim_ != rhs.dim_) throw DimensionError("kernel expressions of different dimension");
  for (const auto& [arg, coeff] : rhs.groups_) add_group(arg, coeff);
  return *this;
}

KernelExpr& KernelExpr::operator-=(const KernelExpr& rhs) { return *this += -rhs; }

KernelExpr operator-(const KernelExpr& a) {
  KernelExpr out = a;
  for (auto& [arg, coeff] : out.groups_) coeff = -coeff;
  return out;
}

KernelExpr operator*(const KernelExpr& a, const KernelExpr& b) {
  if (a.dim_ != b.dim_) throw DimensionError("kernel expressions of different dimension");
  KernelExpr out(a.dim_);
  for (const auto& [arg_a, ca] : a.groups_)
    for (const auto& [arg_b, cb] : b.groups_) out.add_group(arg_a + arg_b, ca * cb);
  return out;
}

KernelExpr operator*(const Rational& c, const KernelExpr& a) {
  KernelExpr out(a.dim_);
  if (c == 0) return out;
  for (const auto& [arg, coeff] : a.groups_) out.add_group(arg, coeff * c);
  return out;
}

KernelExpr KernelExpr::pow(unsigned n) const {
  KernelExpr out = constant(dim_, 1);
  for (unsigned k = 0; k < n; ++k) out = out * *this;
  return out;
}

KernelExpr KernelExpr::times(const Polynomial& laurent) const {
  KernelExpr out(dim_);
  for (const auto& [arg, coeff] : groups_) out.add_group(arg, coeff * laurent);
  return out;
}

KernelExpr KernelExpr::derivative(std::size_t var) const {
  if (var >= nvars()) throw DimensionError("derivative variable out of range");
  KernelExpr out(dim_);
  // d(L e^p) = (dL + L dp) e^p
  for (const auto& [arg, coeff] : groups_)
    out.add_group(arg, coeff.derivative(var) + coeff * arg.derivative(var));
  return out;
}

KernelExpr KernelExpr::shifted(std::size_t var, const Rational& step) const {
  if (var >= nvars()) throw DimensionError("shift variable out of range");
  KernelExpr out(dim_);
  for (const auto& [arg, coeff] : groups_) {
    if (coeff.degree_in(var, true) < 0)
      throw UnsupportedError("shift of an expression with a denominator in the shifted variable");
    out.add_group(arg.shifted(var, step), coeff.shifted(var, step));
  }
  return out;
}

KernelExpr KernelExpr::swapped() const {
  std::vector<std::size_t> perm(nvars());
  for (std::size_t i = 0; i < dim_; ++i) {
    perm[i] = i + dim_;
    perm[i + dim_] = i;
  }
  KernelExpr out(dim_);
  for (const auto& [arg, coeff] : groups_) out.add_group(arg.permuted(perm), coeff.permuted(perm));
  return out;
}

std::vector<std::pair<Rational, Rational>> KernelExpr::evaluate_groups(
    const std::vector<Rational>& point) const {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [arg, coeff] : groups_) out.emplace_back(coeff.evaluate(point), arg.evaluate(point));
  return out;
}

long double KernelExpr::evaluate_exact(const std::vector<Rational>& point) const {
  long double sum = 0;
  for (const auto& [c, a] : evaluate_groups(point))
    sum += static_cast<long double>(c.get_d()) * std::exp(static_cast<long double>(a.get_d()));
  return sum;
}

// ---- text -----------------------------------------------------------------

std::vector<std::string> kernel_variable_names(const std::vector<std::string>& coordinates) {
  std::vector<std::string> names;
  for (const auto& c : coordinates) names.push_back(c + "1");
  for (const auto& c : coordinates) names.push_back(c + "2");
  return names;
}

std::string to_string(const KernelExpr& e, const std::vector<std::string>& names) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [arg, coeff] : e.groups()) {
    // Split the Laurent coefficient into numerator / monomial denominator.
    std::vector<int> den_exp(coeff.nvars(), 0);
    for (std::size_t v = 0; v < coeff.nvars(); ++v)
      den_exp[v] = std::max(0, -coeff.degree_in(v, true));
    Monomial den(den_exp);
    Polynomial num = coeff.times_monomial(den);
    bool has_exp = !arg.is_zero();
    std::string text;
    if (!den.is_one()) {
      text = "(" + to_string(num, names) + ")/(" +
             to_string(Polynomial::term(den, Rational(1)), names) + ")";
    } else if (has_exp) {
      std::string n = to_string(num, names);
      text = n == "1" ? "" : (n == "-1" ? "-" : "(" + n + ")");
    } else {
      text = to_string(num, names);
    }
    if (has_exp) {
      std::string x = "exp(" + to_string(arg, names) + ")";
      text = (text.empty() || text == "-") ? text + x : text + "*" + x;
    }
    if (out.empty()) out = text;
    else if (text.front() == '-') out += " - " + text.substr(1);
    else out += " + " + text;
  }
  return out;
}

std::string to_string(const MatrixKernel& k, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j)
      os << "K[" << i << "," << j << "] = " << to_string(k(i, j), names) << '\n';
  return os.str();
}

KernelExpr to_kernel(const expr::Node& node, const std::vector<std::string>& names) {
  using K = expr::Node::Kind;
  if (names.size() % 2 != 0) throw DimensionError("kernel variable names come in pairs");
  const std::size_t dim = names.size() / 2;
  auto as_monomial = [&](const KernelExpr& e) -> std::optional<std::pair<Monomial, Rational>> {
    if (e.groups().size() != 1 || !e.groups().begin()->first.is_zero()) return std::nullopt;
    const Polynomial& c = e.groups().begin()->second;
    if (c.size() != 1) return std::nullopt;
    return *c.terms().begin();
  };
  switch (node.kind) {
    case K::Number: return KernelExpr::constant(dim, node.number);
    case K::Symbol: {
      auto it = std::find(names.begin(), names.end(), node.name);
      if (it == names.end())
        throw ParseError("unknown variable '" + node.name + "'", node.line, node.column);
      return KernelExpr::from_polynomial(
          dim, Polynomial::variable(2 * dim, static_cast<std::size_t>(it - names.begin())));
    }
    case K::Neg: return -to_kernel(*node.args[0], names);
    case K::Add: return to_kernel(*node.args[0], names) + to_kernel(*node.args[1], names);
    case K::Sub: return to_kernel(*node.args[0], names) - to_kernel(*node.args[1], names);
    case K::Mul: return to_kernel(*node.args[0], names) * to_kernel(*node.args[1], names);
    case K::Div: {
      auto m = as_monomial(to_kernel(*node.args[1], names));
      if (!m)
        throw ParseError("only division by a monomial is supported", node.line, node.column);
      Monomial inv = Monomial(2 * dim) / m->first;
      return to_kernel(*node.args[0], names).times(Polynomial::term(inv, Rational(1 / m->second)));
    }
    case K::Pow: {
      long e = expr::exponent_of(node);
      KernelExpr base = to_kernel(*node.args[0], names);
      if (e >= 0) return base.pow(static_cast<unsigned>(e));
      auto m = as_monomial(base);
      if (!m) throw ParseError("negative powers need a monomial base", node.line, node.column);
      Monomial inv = Monomial(2 * dim) / m->first;
      Rational c = 1 / m->second;
      return KernelExpr::from_polynomial(dim, Polynomial::term(inv, c)).pow(static_cast<unsigned>(-e));
    }
    case K::Call: {
      if (node.name != "exp")
        throw ParseError("unknown function '" + node.name + "'", node.line, node.column);
      KernelExpr arg = to_kernel(*node.args[0], names);
      if (arg.is_zero()) return KernelExpr::constant(dim, 1);
      if (arg.groups().size() != 1 || !arg.groups().begin()->first.is_zero() ||
          arg.groups().begin()->second.has_negative_exponents())
        throw ParseError("exp argument must be a polynomial", node.line, node.column);
      return KernelExpr::exp(dim, arg.groups().begin()->second);
    }
  }
  throw ParseError("bad expression", node.line, node.column);
}

KernelExpr parse_kernel(std::string_view text, const std::vector<std::string>& names) {
  return to_kernel(*expr::parse(text), names);
}

// ---- operators --------------------------------------------------------------

KernelExpr se_kernel(std::size_t dim, const Rational& lengthscale, const Rational& variance) {
  if (lengthscale <= 0 || variance <= 0)
    throw std::invalid_argument("squared exponential hyperparameters must be positive");
  Polynomial arg(2 * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Polynomial diff = Polynomial::variable(2 * dim, i) - Polynomial::variable(2 * dim, i + dim);
    arg += diff * diff;
  }
  arg *= Rational(-1 / (2 * lengthscale * lengthscale));
  return variance * KernelExpr::exp(dim, arg);
}

namespace {

std::size_t side_var(std::size_t coordinate, Side side, std::size_t dim) {
  if (coordinate >= dim) throw DimensionError("operator acts on a coordinate the kernel lacks");
  return side == Side::Primed ? coordinate + dim : coordinate;
}

}  // namespace

KernelExpr apply_operator(const KernelExpr& e, const Polynomial& op, Side side,
                          const std::vector<Action>& actions, const Rational& shift_step) {
  if (op.nvars() != actions.size()) throw DimensionError("one action per generator required");
  const std::size_t dim = e.dim();
  KernelExpr out(dim);
  for (const auto& [mono, c] : op.terms()) {
    KernelExpr term = e;
    for (std::size_t g = 0; g < actions.size(); ++g) {
      const std::size_t var = side_var(actions[g].coordinate, side, dim);
      for (int k = 0; k < mono[g]; ++k) {
        switch (actions[g].kind) {
          case ActionKind::Differentiate: term = term.derivative(var); break;
          case ActionKind::Multiply:
            term = term.times(Polynomial::variable(2 * dim, var));
            break;
          case ActionKind::Shift: term = term.shifted(var, shift_step); break;
        }
      }
    }
    out += c * term;
  }
  return out;
}

namespace {

/// c(t) as a Laurent polynomial in variable `var`; requires a monomial
/// denominator.
Polynomial laurent_of(const ore::RatFunc& c, std::size_t var, std::size_t nvars) {
  const ore::UPoly& den = c.den();
  if (!den.is_monomial())
    throw UnsupportedError("coefficient " + ore::to_string(c) +
                           " has a non-monomial denominator");
  const int shift = den.degree();
  const Rational scale = 1 / den.lead();
  Polynomial out(nvars);
  for (std::size_t i = 0; i < c.num().coeffs().size(); ++i)
    out.add_term(Monomial::variable(nvars, var, static_cast<int>(i) - shift), c.num()[i] * scale);
  return out;
}

}  // namespace

KernelExpr apply_operator(const KernelExpr& e, const ore::SkewPoly& op, Side side,
                          std::size_t coordinate) {
  const std::size_t var = side_var(coordinate, side, e.dim());
  KernelExpr out(e.dim());
  KernelExpr deriv = e;
  for (std::size_t i = 0; i < op.coeffs().size(); ++i) {
    if (i > 0) deriv = deriv.derivative(var);
    if (op.coeffs()[i].is_zero()) continue;
    out += deriv.times(laurent_of(op.coeffs()[i], var, e.nvars()));
  }
  return out;
}

namespace {

template <class Apply>
MatrixKernel pushforward(std::size_t rows, std::size_t latent_count,
                         const std::vector<KernelExpr>& latent, Apply&& apply) {
  if (latent.size() != latent_count)
    throw DimensionError("one latent covariance per column of the parametrization required");
  const std::size_t dim = latent.empty() ? 0 : latent.front().dim();
  MatrixKernel k(rows, rows, KernelExpr(dim));
  for (std::size_t c = 0; c < latent_count; ++c) {
    std::vector<KernelExpr> left;
    for (std::size_t i = 0; i < rows; ++i) left.push_back(apply(i, c, latent[c], Side::Unprimed));
    for (std::size_t i = 0; i < rows; ++i) {
      if (left[i].is_zero()) continue;
      for (std::size_t j = 0; j < rows; ++j) k(i, j) += apply(j, c, left[i], Side::Primed);
    }
  }
  return k;
}

}  // namespace

MatrixKernel pushforward_covariance(const OperatorMatrix& b, const std::vector<KernelExpr>& latent,
                                    const Rational& shift_step) {
  const auto& actions = b.ring().actions();
  return pushforward(b.rows(), b.cols(), latent,
                     [&](std::size_t i, std::size_t c, const KernelExpr& e, Side side) {
                       return apply_operator(e, b(i, c), side, actions, shift_step);
                     });
}

MatrixKernel pushforward_covariance(const ore::SkewMatrix& b, const std::vector<KernelExpr>& latent,
                                    std::size_t coordinate) {
  return pushforward(b.rows(), b.cols(), latent,
                     [&](std::size_t i, std::size_t c, const KernelExpr& e, Side side) {
                       return apply_operator(e, b(i, c), side, coordinate);
                     });
}

bool annihilation_check(const OperatorMatrix& a, const MatrixKernel& k, const Rational& shift_step) {
  if (a.cols() != k.rows()) throw DimensionError("operator and kernel sizes differ");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < k.cols(); ++j) {
      KernelExpr sum(k.zero().dim());
      for (std::size_t i = 0; i < a.cols(); ++i)
        sum += apply_operator(k(i, j), a(r, i), Side::Unprimed, a.ring().actions(), shift_step);
      if (!sum.is_zero()) return false;
    }
  return true;
}

bool annihilation_check(const ore::SkewMatrix& a, const MatrixKernel& k, std::size_t coordinate) {
  if (a.cols() != k.rows()) throw DimensionError("operator and kernel sizes differ");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < k.cols(); ++j) {
      KernelExpr sum(k.zero().dim());
      for (std::size_t i = 0; i < a.cols(); ++i)
        sum += apply_operator(k(i, j), a(r, i), Side::Unprimed, coordinate);
      if (!sum.is_zero()) return false;
    }
  return true;
}

bool is_symmetric(const MatrixKernel& k) {
  if (k.rows() != k.cols()) return false;
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = i; j < k.cols(); ++j)
      if (!(k(i, j).swapped() == k(j, i))) return false;
  return true;
}

// ---- numeric evaluation -----------------------------------------------------

CompiledKernel::CompiledKernel(const MatrixKernel& k)
    : dim_(k.zero().dim()), outputs_(k.rows()) {
  if (k.rows() != k.cols()) throw DimensionError("matrix kernel must be square");
  auto convert = [](const Polynomial& p) {
    std::vector<Term> out;
    for (const auto& [mono, c] : p.terms()) {
      Term t{c.get_d(), {}};
      for (std::size_t v = 0; v < mono.size(); ++v)
        if (mono[v] != 0) t.factors.emplace_back(v, mono[v]);
      out.push_back(std::move(t));
    }
    return out;
  };
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) {
      std::vector<Group> groups;
      for (const auto& [arg, coeff] : k(i, j).groups()) groups.push_back({convert(coeff), convert(arg)});
      entries_.push_back(std::move(groups));
    }
}

double CompiledKernel::eval(const std::vector<Term>& terms, const double* vars) {
  double sum = 0.0;
  for (const auto& t : terms) {
    double v = t.coeff;
    for (const auto& [var, e] : t.factors) {
      double x = vars[var];
      if (e < 0) {
        if (x == 0.0) throw PoleError("kernel denominator vanishes at the evaluation point");
        x = 1.0 / x;
      }
      for (int p = std::abs(e); p > 0; --p) v *= x;
    }
    sum += v;
  }
  return sum;
}

double CompiledKernel::operator()(const double* x, std::size_t ci, const double* xp,
                                  std::size_t cj) const {
  if (ci >= outputs_ || cj >= outputs_) throw DimensionError("output component out of range");
  std::vector<double> vars(2 * dim_);
  std::copy(x, x + dim_, vars.begin());
  std::copy(xp, xp + dim_, vars.begin() + static_cast<std::ptrdiff_t>(dim_));
  double sum = 0.0;
  for (const auto& g : entries_[ci * outputs_ + cj]) {
    double c = eval(g.coeff, vars.data());
    sum += g.arg.empty() ? c : c * std::exp(eval(g.arg, vars.data()));
  }
  return sum;
}

CompiledKernel compile_evaluator(const MatrixKernel& k) { return CompiledKernel(k); }

}  // namespace lcgp
