#include "ffvojta/ratfunc.hpp"

#include "ffvojta/error.hpp"

namespace ffvojta {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "denominator is zero");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = num / g;
    den = den / g;
  }
  Rational lc = den.leading();
  num_ = num * Poly(1 / lc);
  den_ = den.monic();
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::PreconditionViolated, to_string() + " is not constant");
  return num_.coeff(0);
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroFunction, "inverse of 0");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  const auto k = static_cast<unsigned>(e);
  return RatFunc(num_.pow(k), den_.pow(k), Trusted{});
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
  return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  // cross-cancel first to keep the intermediate products small
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = (num_ / g1) * (o.num_ / g2);
  Poly d = (den_ / g2) * (o.den_ / g1);
  Rational lc = d.leading();
  *this = RatFunc(n * Poly(1 / lc), d.monic(), Trusted{});
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero function");
  return *this *= o.inverse();
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace ffvojta
