#pragma once

#include <ostream>
#include <string>

#include "ffvojta/poly.hpp"

namespace ffvojta {

/// Element of Q(t) as num/den with gcd 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly num);  // NOLINT
  RatFunc(const Rational& c) : RatFunc(Poly(c)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Poly(c)) {}  // NOLINT
  /// Throws DivisionByZeroPoly when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc t() { return RatFunc(Poly::t()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant function; throws PreconditionViolated otherwise.
  Rational constant_value() const;

  RatFunc derivative() const;
  /// Negative powers invert; throws ZeroFunction for 0^{-k}.
  RatFunc pow(long e) const;
  RatFunc inverse() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Trusted{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

  /// "p" for polynomials, "(p)/(q)" otherwise; reparses to the same value.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

 private:
  struct Trusted {};
  RatFunc(Poly num, Poly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

}  // namespace ffvojta
