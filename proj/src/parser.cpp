#include "ffvojta/parser.hpp"

#include <cctype>
#include <string>

#include "ffvojta/error.hpp"

namespace ffvojta {
namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view src, bool allow_xy) : src_(src), allow_xy_(allow_xy) {}

  BiPoly parse() {
    BiPoly v = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(src_) + "'");
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        const size_t at = pos_;
        BiPoly d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by an expression in X or Y");
        }
        if (d.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by zero at offset " + std::to_string(at));
        acc *= BiPoly(d.coeff(0, 0).inverse());
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (!eat('^')) return base;
    skip();
    const size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a nonnegative integer literal");
    const std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 5 || std::stoul(digits) > kMaxExponent) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  BiPoly primary() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return BiPoly(RatFunc(Rational(Integer(std::string(src_.substr(start, pos_ - start))))));
    }
    if (c == '(') {
      ++pos_;
      BiPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return BiPoly(RatFunc::t());
    }
    if (c == 'X' || c == 'Y') {
      if (!allow_xy_) fail(std::string("variable ") + c + " is not allowed here");
      ++pos_;
      return c == 'X' ? BiPoly::x() : BiPoly::y();
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  bool allow_xy_;
  size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view src) { return Parser(src, true).parse(); }

RatFunc parse_ratfunc(std::string_view src) { return Parser(src, false).parse().coeff(0, 0); }

}  // namespace ffvojta
