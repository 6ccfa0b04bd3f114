#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lcgp/rational.hpp"

namespace lcgp::expr {

/// Untyped syntax tree shared by every text grammar in the project.
/// Interpreters turn it into polynomials, skew polynomials or kernels.
struct Node {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow, Call };

  Kind kind;
  Rational number;       // Number
  std::string name;      // Symbol, Call
  std::vector<std::unique_ptr<Node>> args;
  std::size_t line = 1;
  std::size_t column = 1;
};

using NodePtr = std::unique_ptr<Node>;

/// Grammar (whitespace insignificant):
///   sum     := ['+'|'-'] product (('+'|'-') product)*
///   product := power (('*'|'/') power)*
///   power   := atom ['^' ['-'] integer]
///   atom    := number | name | name '(' sum ')' | '(' sum ')'
/// `line`/`column` locate the text inside a larger file for error messages.
NodePtr parse(std::string_view text, std::size_t line = 1, std::size_t column = 1);

/// Integer value of the exponent node of a Pow.
long exponent_of(const Node& pow);

}  // namespace lcgp::expr
