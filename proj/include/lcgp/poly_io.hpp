#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lcgp/expr.hpp"
#include "lcgp/matrix.hpp"
#include "lcgp/polynomial.hpp"

namespace lcgp {

/// Prints in the polynomial text grammar, e.g. `d1^2*d2 - 1/2*d3 + 3`.
/// Terms appear in degrevlex-descending order.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);

/// Parses the polynomial text grammar over the given generator names.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            std::size_t line = 1, std::size_t column = 1);

/// Interprets a syntax tree as a polynomial (division only by nonzero constants).
Polynomial to_polynomial(const expr::Node& node, const std::vector<std::string>& names);

using PolyMatrix = Matrix<Polynomial>;

std::string to_string(const PolyMatrix& m, const std::vector<std::string>& names);

/// One row per line, entries separated by commas.
PolyMatrix parse_poly_matrix(std::string_view text, const std::vector<std::string>& names);

}  // namespace lcgp
