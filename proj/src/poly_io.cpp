#include "lcgp/poly_io.hpp"

#include <algorithm>
#include <sstream>

#include "lcgp/errors.hpp"
#include "lcgp/monomial_order.hpp"

namespace lcgp {

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (names.size() != p.nvars()) throw DimensionError("name list does not match the ring");
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  MonomialOrder ord;
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return ord.compare(a.first, b.first) > 0; });
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string t;
    if (m.is_one()) {
      t = to_string(c);
    } else if (c == 1) {
      t = monomial_text(m, names);
    } else if (c == -1) {
      t = "-" + monomial_text(m, names);
    } else {
      t = to_string(c) + "*" + monomial_text(m, names);
    }
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

Polynomial to_polynomial(const expr::Node& node, const std::vector<std::string>& names) {
  using K = expr::Node::Kind;
  const std::size_t n = names.size();
  switch (node.kind) {
    case K::Number: return Polynomial(n, node.number);
    case K::Symbol: {
      auto it = std::find(names.begin(), names.end(), node.name);
      if (it == names.end())
        throw ParseError("unknown generator '" + node.name + "'", node.line, node.column);
      return Polynomial::variable(n, static_cast<std::size_t>(it - names.begin()));
    }
    case K::Neg: return -to_polynomial(*node.args[0], names);
    case K::Add: return to_polynomial(*node.args[0], names) + to_polynomial(*node.args[1], names);
    case K::Sub: return to_polynomial(*node.args[0], names) - to_polynomial(*node.args[1], names);
    case K::Mul: return to_polynomial(*node.args[0], names) * to_polynomial(*node.args[1], names);
    case K::Div: {
      Polynomial den = to_polynomial(*node.args[1], names);
      if (!den.is_constant() || den.is_zero())
        throw ParseError("polynomials may only be divided by nonzero constants", node.line,
                         node.column);
      return to_polynomial(*node.args[0], names) * Rational(1 / den.constant());
    }
    case K::Pow: {
      long e = expr::exponent_of(node);
      if (e < 0) throw ParseError("negative exponent in a polynomial", node.line, node.column);
      return to_polynomial(*node.args[0], names).pow(static_cast<unsigned>(e));
    }
    case K::Call:
      throw ParseError("function '" + node.name + "' is not allowed in a polynomial", node.line,
                       node.column);
  }
  throw ParseError("bad expression", node.line, node.column);
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            std::size_t line, std::size_t column) {
  return to_polynomial(*expr::parse(text, line, column), names);
}

std::string to_string(const PolyMatrix& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m(i, j), names);
    }
    os << '\n';
  }
  return os.str();
}

PolyMatrix parse_poly_matrix(std::string_view text, const std::vector<std::string>& names) {
  std::vector<std::vector<Polynomial>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    std::vector<Polynomial> row;
    std::size_t cell_start = 0;
    for (;;) {
      std::size_t comma = line.find(',', cell_start);
      std::string_view cell =
          line.substr(cell_start, comma == std::string_view::npos ? line.size() - cell_start
                                                                  : comma - cell_start);
      row.push_back(parse_polynomial(cell, names, line_no, cell_start + 1));
      if (comma == std::string_view::npos) break;
      cell_start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix row " + std::to_string(rows.size() + 1) + " has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       line_no, 1);
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  return PolyMatrix::from_rows(rows, Polynomial(names.size()));
}

}  // namespace lcgp
