#include "lcgp/ore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lcgp/errors.hpp"

namespace lcgp::ore {

// ---- UPoly ----------------------------------------------------------------

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::t(int power) {
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1, Rational(0));
  c.back() = 1;
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool UPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }) == 1;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (coeffs_.empty()) return {};
  UPoly out = *this;
  Rational inv = 1 / lead();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational v = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
  return v;
}

double UPoly::evaluate(double x) const {
  double v = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i].get_d();
  return v;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a) {
  UPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(c));
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rational(0));
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational lb = b.lead();
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / lb;
    quot[k - db] = f;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.coeffs()[i];
  }
  q = UPoly(std::move(quot));
  r = UPoly(std::move(rem));
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// ---- RatFunc --------------------------------------------------------------

RatFunc::RatFunc(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  UPoly g = gcd(num, den);
  UPoly q, r;
  divmod(num, g, num_, r);
  divmod(den, g, den_, r);
  Rational lead = den_.lead();
  if (lead != 1) {
    num_ = num_ * UPoly(Rational(1 / lead));
    den_ = den_.monic();
  }
}

RatFunc RatFunc::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return {den_, num_};
}

Rational RatFunc::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (d == 0) throw PoleError("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  UPoly g = gcd(a.den_, b.den_), ad, bd, r;
  divmod(a.den_, g, ad, r);
  divmod(b.den_, g, bd, r);
  return {a.num_ * bd + b.num_ * ad, a.den_ * bd};
}
RatFunc operator-(const RatFunc& a) { return {-a.num_, a.den_}; }
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

// ---- SkewPoly -------------------------------------------------------------

SkewPoly::SkewPoly(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

SkewPoly SkewPoly::dt(int power) {
  std::vector<RatFunc> c(static_cast<std::size_t>(power) + 1);
  c.back() = RatFunc(Rational(1));
  return SkewPoly(std::move(c));
}

void SkewPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
  trim();
  return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& rhs) { return *this += -rhs; }

SkewPoly operator-(const SkewPoly& a) {
  SkewPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // dt^i * r = sum_k C(i, k) r^(k) dt^(i - k)
  const std::size_t da = a.coeffs_.size() - 1;
  std::vector<RatFunc> out(da + b.coeffs_.size());
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
    if (b.coeffs_[j].is_zero()) continue;
    std::vector<RatFunc> derivs{b.coeffs_[j]};
    for (std::size_t k = 1; k <= da; ++k) derivs.push_back(derivs.back().derivative());
    for (std::size_t i = 0; i <= da; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      Integer binom = 1;
      for (std::size_t k = 0; k <= i; ++k) {
        if (!derivs[k].is_zero())
          out[i - k + j] = out[i - k + j] + a.coeffs_[i] * RatFunc(Rational(binom)) * derivs[k];
        binom *= static_cast<unsigned long>(i - k);
        binom /= static_cast<unsigned long>(k + 1);
      }
    }
  }
  return SkewPoly(std::move(out));
}

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) { return a * b; }

namespace {

enum class Side { QuotientLeft, QuotientRight };

Division divide(const SkewPoly& a, const SkewPoly& b, Side side) {
  if (b.is_zero()) throw std::domain_error("skew polynomial division by zero");
  Division d;
  d.remainder = a;
  while (d.remainder.degree() >= b.degree()) {
    int m = d.remainder.degree() - b.degree();
    SkewPoly step = SkewPoly(d.remainder.lead() / b.lead()) * SkewPoly::dt(m);
    d.quotient += step;
    d.remainder -= side == Side::QuotientLeft ? step * b : b * step;
  }
  return d;
}

int min_degree_index(const std::vector<const SkewPoly*>& entries) {
  int best = -1;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i]->is_zero()) continue;
    if (best < 0 || entries[i]->degree() < entries[best]->degree()) best = static_cast<int>(i);
  }
  return best;
}

}  // namespace

Division right_divide(const SkewPoly& a, const SkewPoly& b) {
  return divide(a, b, Side::QuotientLeft);
}

Division left_divide(const SkewPoly& a, const SkewPoly& b) {
  return divide(a, b, Side::QuotientRight);
}

SkewMatrix skew_identity(std::size_t n) {
  return SkewMatrix::identity(n, SkewPoly(), SkewPoly(Rational(1)));
}

SkewMatrix ore_right_kernel(const SkewMatrix& a) {
  const std::size_t cols = a.cols();
  SkewMatrix work = a;
  SkewMatrix transform = skew_identity(cols);
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < a.rows() && pivot < cols; ++r) {
    for (;;) {
      std::vector<const SkewPoly*> entries;
      for (std::size_t j = pivot; j < cols; ++j) entries.push_back(&work(r, j));
      int best = min_degree_index(entries);
      if (best < 0) break;  // row already zero beyond the pivot
      std::size_t bc = pivot + static_cast<std::size_t>(best);
      work.swap_cols(pivot, bc);
      transform.swap_cols(pivot, bc);
      bool done = true;
      for (std::size_t j = pivot + 1; j < cols; ++j) {
        if (work(r, j).is_zero()) continue;
        // column_j -= column_pivot * q
        SkewPoly q = left_divide(work(r, j), work(r, pivot)).quotient;
        for (std::size_t i = 0; i < a.rows(); ++i) work(i, j) -= work(i, pivot) * q;
        for (std::size_t i = 0; i < cols; ++i) transform(i, j) -= transform(i, pivot) * q;
        if (!work(r, j).is_zero()) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  return transform.col_range(pivot, cols);
}

namespace {

struct RowEchelon {
  SkewMatrix work;
  SkewMatrix transform;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon row_echelon(const SkewMatrix& b) {
  const std::size_t rows = b.rows();
  RowEchelon e{b, skew_identity(rows), {}};
  std::size_t pivot = 0;
  for (std::size_t c = 0; c < b.cols() && pivot < rows; ++c) {
    for (;;) {
      std::vector<const SkewPoly*> entries;
      for (std::size_t i = pivot; i < rows; ++i) entries.push_back(&e.work(i, c));
      int best = min_degree_index(entries);
      if (best < 0) break;
      std::size_t br = pivot + static_cast<std::size_t>(best);
      e.work.swap_rows(pivot, br);
      e.transform.swap_rows(pivot, br);
      bool done = true;
      for (std::size_t i = pivot + 1; i < rows; ++i) {
        if (e.work(i, c).is_zero()) continue;
        // row_i -= q * row_pivot
        SkewPoly q = right_divide(e.work(i, c), e.work(pivot, c)).quotient;
        for (std::size_t j = 0; j < b.cols(); ++j) e.work(i, j) -= q * e.work(pivot, j);
        for (std::size_t j = 0; j < rows; ++j) e.transform(i, j) -= q * e.transform(pivot, j);
        if (!e.work(i, c).is_zero()) done = false;
      }
      if (done) {
        e.pivot_cols.push_back(c);
        ++pivot;
        break;
      }
    }
  }
  return e;
}

}  // namespace

SkewMatrix ore_left_kernel(const SkewMatrix& b) {
  RowEchelon e = row_echelon(b);
  return e.transform.row_range(e.pivot_cols.size(), b.rows());
}

bool ore_row_member(const std::vector<SkewPoly>& row, const SkewMatrix& rows) {
  if (row.size() != rows.cols()) throw DimensionError("row length mismatch");
  RowEchelon e = row_echelon(rows);
  std::vector<SkewPoly> v = row;
  std::size_t next_col = 0;
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    const std::size_t c = e.pivot_cols[k];
    for (; next_col < c; ++next_col)
      if (!v[next_col].is_zero()) return false;
    Division d = right_divide(v[c], e.work(k, c));
    if (!d.remainder.is_zero()) return false;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= d.quotient * e.work(k, j);
    next_col = c + 1;
  }
  return std::all_of(v.begin(), v.end(), [](const SkewPoly& p) { return p.is_zero(); });
}

bool ore_same_row_module(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!ore_row_member(a.row(i), b)) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!ore_row_member(b.row(i), a)) return false;
  return true;
}

OreReport ore_check_parametrizable(const SkewMatrix& a) {
  OreReport report;
  report.parametrization = ore_right_kernel(a);
  report.controllable = ore_left_kernel(report.parametrization);
  report.parametrizable = true;
  for (std::size_t i = 0; i < report.controllable.rows() && report.parametrizable; ++i)
    report.parametrizable = ore_row_member(report.controllable.row(i), a);
  return report;
}

// ---- text -----------------------------------------------------------------

std::string to_string(const UPoly& p, const std::string& t) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? t : t + "^" + std::to_string(i));
    std::string term;
    if (mono.empty()) term = c.get_str();
    else if (c == 1) term = mono;
    else if (c == -1) term = "-" + mono;
    else term = c.get_str() + "*" + mono;
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

std::string to_string(const RatFunc& f, const std::string& t) {
  if (f.den() == UPoly(Rational(1))) return to_string(f.num(), t);
  return "(" + to_string(f.num(), t) + ")/(" + to_string(f.den(), t) + ")";
}

std::string to_string(const SkewPoly& p, const std::string& t, const std::string& d) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const RatFunc& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string op = i == 0 ? "" : (i == 1 ? d : d + "^" + std::to_string(i));
    std::string coeff = to_string(c, t);
    bool plain = c.den() == UPoly(Rational(1));
    std::string term;
    if (op.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = op;
    } else if (coeff == "-1") {
      term = "-" + op;
    } else if (plain && c.num().is_monomial()) {
      term = coeff + "*" + op;
    } else {
      term = (plain ? "(" + coeff + ")" : coeff) + "*" + op;
    }
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

std::string to_string(const SkewMatrix& m, const std::string& t, const std::string& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m(i, j), t, d);
    }
    os << '\n';
  }
  return os.str();
}

SkewPoly to_skew(const expr::Node& node, const std::string& t, const std::string& d) {
  using K = expr::Node::Kind;
  switch (node.kind) {
    case K::Number: return SkewPoly(node.number);
    case K::Symbol:
      if (node.name == t) return SkewPoly::t();
      if (node.name == d) return SkewPoly::dt();
      throw ParseError("unknown symbol '" + node.name + "' (expected " + t + " or " + d + ")",
                       node.line, node.column);
    case K::Neg: return -to_skew(*node.args[0], t, d);
    case K::Add: return to_skew(*node.args[0], t, d) + to_skew(*node.args[1], t, d);
    case K::Sub: return to_skew(*node.args[0], t, d) - to_skew(*node.args[1], t, d);
    case K::Mul: return to_skew(*node.args[0], t, d) * to_skew(*node.args[1], t, d);
    case K::Div: {
      SkewPoly den = to_skew(*node.args[1], t, d);
      if (den.degree() != 0)
        throw ParseError("division is only allowed by nonzero rational functions of " + t,
                         node.line, node.column);
      return to_skew(*node.args[0], t, d) * SkewPoly(den.lead().inverse());
    }
    case K::Pow: {
      long e = expr::exponent_of(node);
      SkewPoly base = to_skew(*node.args[0], t, d);
      if (e < 0) {
        if (base.degree() != 0)
          throw ParseError("negative powers of operators are undefined", node.line, node.column);
        base = SkewPoly(base.lead().inverse());
        e = -e;
      }
      SkewPoly out(Rational(1));
      for (long k = 0; k < e; ++k) out = out * base;
      return out;
    }
    case K::Call:
      throw ParseError("function '" + node.name + "' is not allowed here", node.line, node.column);
  }
  throw ParseError("bad expression", node.line, node.column);
}

SkewPoly parse_skew(std::string_view text, const std::string& t, const std::string& d,
                    std::size_t line, std::size_t column) {
  return to_skew(*expr::parse(text, line, column), t, d);
}

SkewMatrix parse_skew_matrix(std::string_view text, const std::string& t, const std::string& d) {
  std::vector<std::vector<SkewPoly>> rows;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<SkewPoly> row;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = line.find(',', start);
      std::string cell = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      row.push_back(parse_skew(cell, t, d, line_no, start + 1));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix row " + std::to_string(rows.size() + 1) + " has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       line_no, 1);
    rows.push_back(std::move(row));
  }
  return SkewMatrix::from_rows(rows, SkewPoly());
}

}  // namespace lcgp::ore
