#include "lcgp/expr.hpp"

#include <cctype>

#include "lcgp/errors.hpp"

namespace lcgp::expr {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  NodePtr parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    NodePtr n = parse_sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t line, std::size_t col) const {
    throw ParseError(msg, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  NodePtr make(Node::Kind kind, std::size_t line, std::size_t col) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->line = line;
    n->column = col;
    return n;
  }

  NodePtr binary(Node::Kind kind, NodePtr lhs, NodePtr rhs, std::size_t line, std::size_t col) {
    auto n = make(kind, line, col);
    n->args.push_back(std::move(lhs));
    n->args.push_back(std::move(rhs));
    return n;
  }

  NodePtr parse_sum() {
    skip_space();
    NodePtr lhs = parse_product();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      std::size_t l = line_, col = column_;
      advance();
      NodePtr rhs = parse_product();
      lhs = binary(c == '+' ? Node::Kind::Add : Node::Kind::Sub, std::move(lhs), std::move(rhs), l, col);
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '*' && c != '/') return lhs;
      std::size_t l = line_, col = column_;
      advance();
      NodePtr rhs = parse_unary();
      lhs = binary(c == '*' ? Node::Kind::Mul : Node::Kind::Div, std::move(lhs), std::move(rhs), l, col);
    }
  }

  NodePtr parse_unary() {
    skip_space();
    char c = peek();
    if (c == '-' || c == '+') {
      std::size_t l = line_, col = column_;
      advance();
      NodePtr operand = parse_unary();
      if (c == '+') return operand;
      auto n = make(Node::Kind::Neg, l, col);
      n->args.push_back(std::move(operand));
      return n;
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    skip_space();
    if (peek() != '^') return base;
    std::size_t l = line_, col = column_;
    advance();
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
      skip_space();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail_at("expected an integer exponent after '^'", l, col);
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    auto e = make(Node::Kind::Number, l, col);
    e->number = Rational(Integer(digits, 10));
    if (negative) e->number = -e->number;
    return binary(Node::Kind::Pow, std::move(base), std::move(e), l, col);
  }

  NodePtr parse_atom() {
    skip_space();
    std::size_t l = line_, col = column_;
    if (at_end()) fail("unexpected end of expression");
    char c = peek();
    if (c == '(') {
      advance();
      NodePtr inner = parse_sum();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                           peek() == '\'')) {
        name.push_back(peek());
        advance();
      }
      skip_space();
      if (peek() == '(') {
        advance();
        auto call = make(Node::Kind::Call, l, col);
        call->name = name;
        call->args.push_back(parse_sum());
        skip_space();
        if (peek() != ')') fail("expected ')' to close call of '" + name + "'");
        advance();
        return call;
      }
      auto sym = make(Node::Kind::Symbol, l, col);
      sym->name = std::move(name);
      return sym;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  NodePtr parse_number() {
    std::size_t l = line_, col = column_;
    std::string digits;
    Integer scale = 1;
    bool dot = false;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || (peek() == '.' && !dot))) {
      if (peek() == '.') {
        dot = true;
      } else {
        digits.push_back(peek());
        if (dot) scale *= 10;
      }
      advance();
    }
    if (digits.empty()) fail_at("malformed number", l, col);
    Rational value(Integer(digits, 10), scale);
    value.canonicalize();
    // Scientific suffix, e.g. 1e-6.
    if ((peek() == 'e' || peek() == 'E') && pos_ + 1 < text_.size()) {
      std::size_t look = pos_ + 1;
      bool neg = false;
      if (text_[look] == '+' || text_[look] == '-') neg = text_[look++] == '-';
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        while (pos_ < look) advance();
        long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          e = e * 10 + (peek() - '0');
          if (e > 4000) fail_at("exponent too large", l, col);
          advance();
        }
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
        value = neg ? Rational(value / p) : Rational(value * p);
      }
    }
    auto n = make(Node::Kind::Number, l, col);
    n->number = value;
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace

NodePtr parse(std::string_view text, std::size_t line, std::size_t column) {
  return Parser(text, line, column).parse_all();
}

long exponent_of(const Node& pow) {
  const Rational& e = pow.args.at(1)->number;
  if (!e.get_num().fits_slong_p() || e.get_den() != 1)
    throw ParseError("exponent out of range", pow.line, pow.column);
  return e.get_num().get_si();
}

}  // namespace lcgp::expr
