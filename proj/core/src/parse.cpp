#include "precint/parse.hpp"

#include <cctype>
#include <string>

#include "precint/errors.hpp"
#include "precint/factor.hpp"

namespace precint {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  OreOperator parse_all() {
    OreOperator v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  OreOperator expr() {
    OreOperator v = term();
    while (true) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  OreOperator term() {
    OreOperator v = unary();
    while (true) {
      if (eat('*')) {
        v = ore_multiply(v, unary());
      } else if (eat('/')) {
        const std::size_t at = pos_;
        const OreOperator d = unary();
        if (d.order() > 0) throw ParseError("S may not appear in a denominator", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = v.left_scaled(d.coeff(0).inverse());
      } else {
        return v;
      }
    }
  }

  OreOperator unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  OreOperator power() {
    OreOperator base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected a nonnegative integer exponent");
    }
    const std::string digits = read_digits();
    if (digits.size() > 4) throw ParseError("exponent too large", at);
    const long e = std::stol(digits);
    OreOperator r = OreOperator::scalar(RationalFunction(1));
    for (long i = 0; i < e; ++i) r = ore_multiply(r, base);
    return r;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  OreOperator atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return OreOperator::scalar(RationalFunction(Rational::parse(read_digits())));
    }
    if (c == 'x') {
      ++pos_;
      return OreOperator::scalar(RationalFunction(QPoly::variable()));
    }
    if (c == 'S') {
      ++pos_;
      return OreOperator::shift(1);
    }
    if (c == '(') {
      ++pos_;
      OreOperator v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

OreOperator parse_operator(std::string_view text) { return Parser(text).parse_all(); }

QuotientElement parse_element(std::string_view text, std::size_t r) {
  const OreOperator b = parse_operator(text);
  if (b.order() >= static_cast<long>(r)) {
    throw PreconditionError("element has order " + std::to_string(b.order()) +
                            " but must have order below " + std::to_string(r) +
                            "; reduce it modulo the operator first");
  }
  std::vector<RationalFunction> c(r);
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] = b.coeffs()[i];
  return QuotientElement(std::move(c));
}

RationalFunction parse_rational_function(std::string_view text) {
  const OreOperator b = parse_operator(text);
  if (b.order() > 0) throw ParseError("expected an expression without S", 0);
  return b.coeff(0);
}

AlgebraicPoint parse_point(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.substr(0, 5) != "root(") {
    const RationalFunction f = parse_rational_function(t);
    if (!f.is_polynomial() || f.num().degree() > 0) throw ParseError("expected a rational point", 0);
    return AlgebraicPoint::rational(f.num().coeff(0));
  }
  int depth = 0;
  std::size_t close = std::string_view::npos;
  for (std::size_t i = 4; i < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  const std::size_t base = static_cast<std::size_t>(t.data() - text.data());
  if (close == std::string_view::npos) throw ParseError("unbalanced parentheses in root(...)", base + 4);
  RationalFunction p;
  try {
    p = parse_rational_function(t.substr(5, close - 5));
  } catch (const ParseError& e) {
    throw ParseError("bad polynomial in root(...)", base + 5 + e.position());
  }
  if (!p.is_polynomial() || p.num().degree() < 1) {
    throw ParseError("root(...) needs a nonconstant polynomial", base + 5);
  }
  const QPoly m = p.num().monic();
  if (!is_irreducible(m)) throw PreconditionError("polynomial " + to_string(m, "x") + " is reducible over Q");

  long offset = 0;
  std::string_view rest = trim(t.substr(close + 1));
  if (!rest.empty()) {
    const std::size_t at = base + close + 1;
    const char sign = rest.front();
    if (sign != '+' && sign != '-') throw ParseError("expected '+ n' or '- n' after root(...)", at);
    rest = trim(rest.substr(1));
    if (rest.empty() || rest.size() > 9 ||
        rest.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("expected an integer offset", at);
    }
    offset = std::stol(std::string(rest));
    if (sign == '-') offset = -offset;
  }
  if (m.degree() == 1) return AlgebraicPoint::rational(-m.coeff(0) + Rational(offset));
  return AlgebraicPoint(m, offset);
}

}  // namespace precint
