#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffvojta/rational.hpp"

namespace ffvojta {

/// Univariate polynomial over Q in the variable t, coefficients stored lowest
/// degree first. The zero polynomial has no coefficients; otherwise the last
/// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT: constants promote implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly t() { return monomial(1, 1); }
  static Poly monomial(const Rational& c, int degree);
  /// t - a
  static Poly linear(const Rational& a) { return Poly({-a, Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(int k) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;
  /// this(q(t)).
  Poly compose(const Poly& q) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

  /// Euclidean division; throws ZeroPolynomial on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool divides(const Poly& f) const;
  /// Exact quotient; throws PreconditionViolated if the division leaves a remainder.
  Poly exact_div(const Poly& d) const;

  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;
  /// Fixed total order: degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  /// e.g. "t^2 - 1/2*t + 3"
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Clears denominators and removes the content: the primitive integer
/// polynomial with positive leading coefficient proportional to p.
Poly primitive_part(const Poly& p);

/// Divides d out of f as often as possible and returns how often
/// (f != 0, deg d >= 1).
int strip_factor(Poly& f, const Poly& d);

/// Square-free decomposition by Yun's algorithm. Returns (f_i, m_i) with the
/// f_i monic, square-free, pairwise coprime, m_i strictly increasing, and
/// p = lc(p) * prod f_i^{m_i}. Throws ZeroPolynomial.
std::vector<std::pair<Poly, int>> yun_squarefree(const Poly& p);

/// Refines the inputs into a set of monic, square-free, pairwise coprime
/// polynomials of positive degree such that every input is a constant times
/// a product of powers of them. Uses gcds only.
std::vector<Poly> coprime_base(std::span<const Poly> polys);

}  // namespace ffvojta
