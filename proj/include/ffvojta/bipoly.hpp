#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ffvojta/sunits.hpp"

namespace ffvojta {

/// Univariate polynomial with coefficients in Q(t), lowest degree first.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<RatFunc> coeffs);
  RatPoly(const RatFunc& c);  // NOLINT

  static RatPoly x() { return RatPoly(std::vector<RatFunc>{RatFunc(), RatFunc(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatFunc& leading() const;
  RatFunc coeff(int k) const;
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }

  RatFunc eval(const RatFunc& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }

  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  /// Throws PreconditionViolated on a nonzero remainder.
  RatPoly exact_div(const RatPoly& d) const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  /// Rendered in the variable `var`, e.g. "X^2 + (t)*X - 1".
  std::string to_string(char var = 'X') const;

 private:
  void normalize();
  std::vector<RatFunc> coeffs_;
};

/// Monic gcd over Q(t).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Polynomial in X, Y with coefficients in Q(t); no zero coefficients stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (i, j) for X^i Y^j

  BiPoly() = default;
  BiPoly(const RatFunc& c);  // NOLINT
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  static BiPoly monomial(const RatFunc& c, int i, int j);

  const std::map<Key, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int deg_x() const;
  int deg_y() const;
  /// deg_x + deg_y
  int degree() const { return deg_x() + deg_y(); }

  BiPoly partial_x() const;
  BiPoly partial_y() const;
  /// Exchanges the roles of X and Y.
  BiPoly swapped() const;
  BiPoly pow(unsigned e) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// As a polynomial in Y with coefficients in Q(t)[X].
  std::vector<RatPoly> y_coefficients() const;
  /// Specializes X at x0.
  RatPoly at_x(const RatFunc& x0) const;
  /// Substitutes t = t0 in every coefficient (poles rejected with PreconditionViolated).
  std::map<Key, Rational> at_t(const Rational& t0) const;

  /// e.g. "(t)*X*Y + (t^2 - 1)"; reparses to the same polynomial.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const BiPoly& a) { return os << a.to_string(); }

 private:
  void set(const Key& k, RatFunc c);
  std::map<Key, RatFunc> terms_;
};

RatFunc evaluate(const BiPoly& a, const RatFunc& u, const RatFunc& v);

/// Max height of the coefficients. Throws ZeroPolynomial.
long poly_height(const BiPoly& a);

/// Coefficients lambda_ij (i theta_u + j theta_v) + lambda_ij', so that
/// deriv_omega(A(u, v)) = B(u, v).
BiPoly b_polynomial(const BiPoly& a, const RatFunc& u, const RatFunc& v, const OmegaForm& w);
BiPoly b_polynomial(const BiPoly& a, const SUnit& u, const SUnit& v, const OmegaForm& w);

/// s X dA/dX - r Y dA/dY. Throws BothZero.
BiPoly a_star(const BiPoly& a, long r, long s);

/// Sylvester resultants; the result is a polynomial in X (resp. Y).
/// Throws DegenerateDegree when either input has degree 0 in the eliminated variable.
RatPoly resultant_y(const BiPoly& a, const BiPoly& b);
RatPoly resultant_x(const BiPoly& a, const BiPoly& b);

/// Whether A has a square factor of positive degree in X, Y. Throws ConstantPolynomial.
bool has_repeated_factors(const BiPoly& a);

struct RootSet {
  std::vector<RatFunc> roots;  // with multiplicity, sorted
  bool complete = false;       // roots.size() == deg F
};

/// Roots of F lying in Q(t). Throws ZeroPolynomial.
RootSet rational_roots(const RatPoly& f);

enum class LemmaBranch { ConstantQuotient, SingularPoint, Bezout, AStarZero, AStarMultiple };
std::string_view to_string(LemmaBranch b);

struct LemmaOutcome {
  LemmaBranch branch;
  RatFunc gamma;  // mu alpha^r beta^s; unset for ConstantQuotient
  Rational a_star_ratio;  // a with A* = a A, for AStarMultiple
};

/// Checks every hypothesis of the dependence lemma (throwing
/// PreconditionViolated naming the failed identity), then reports the
/// branch taken and gamma with u^r v^s = gamma verified.
LemmaOutcome check_dependence_lemma(const BiPoly& a, const SUnit& u, const SUnit& v, const RatFunc& alpha,
                                    const RatFunc& beta, long r, long s, const Rational& mu, const OmegaForm& w);

/// Irreducibility audit: specializes t at `trials` seeded rationals and
/// looks for a specialization whose X- or Y-univariate slices prove that
/// no factorization of the observed degree pattern exists. Returns true
/// when the specializations are consistent with irreducibility.
bool audit_irreducible(const BiPoly& a, int trials, std::uint64_t seed);

}  // namespace ffvojta
