#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ffvojta/bipoly.hpp"
#include "ffvojta/constants.hpp"
#include "ffvojta/counting.hpp"

namespace ffvojta {

/// Twist (a, b) of O(a) on P^2 boxed with O(b) on P^1.
struct BiDegree {
  long a = 0;
  long b = 0;
  friend BiDegree operator+(BiDegree l, BiDegree r) { return {l.a + r.a, l.b + r.b}; }
  friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

/// Polynomial in x0, x1, x2, y0, y1 over Q.
class BiForm {
 public:
  using Exps = std::array<int, 5>;

  BiForm() = default;
  explicit BiForm(Rational c);
  static BiForm var(int index);  // 0..2 are x0..x2, 3..4 are y0..y1

  const std::map<Exps, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Throws InvalidInput when not bihomogeneous.
  BiDegree bidegree() const;
  BiForm partial(int index) const;
  BiForm pow(unsigned e) const;

  BiForm& operator+=(const BiForm& o);
  BiForm& operator-=(const BiForm& o);
  friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
  friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
  friend BiForm operator*(const BiForm& a, const BiForm& b);
  friend bool operator==(const BiForm&, const BiForm&) = default;

  /// e.g. "8*x0*x1*x2*y0^6"; terms in descending exponent order.
  std::string to_string() const;

 private:
  std::map<Exps, Rational> terms_;
};

/// (d - 3, l - 2): absolute log-canonical class of P^2 x P^1 plus a divisor of
/// bidegree (d, l).
BiDegree log_canonical_bidegree(long d, long l);
/// (d - 3, l): relative version over the base line.
BiDegree relative_log_canonical_bidegree(long d, long l);

/// det(d g_i / d x_j). Throws DegenerateMap on a zero determinant.
BiForm jacobian_ramification(const BiForm& g1, const BiForm& g2, const BiForm& g3);

/// Largest monomial dividing every term, and the cofactor.
std::pair<BiForm, BiForm> monomial_content(const BiForm& f);

/// The reducible quartic family and its pi_0 components.
struct QuarticFixture {
  BiForm line0, line1, conic;  // y0 x0, y0 x1, and the conic factor
  BiForm g1, g2, g3;           // (y0 x0)^2, (y0 x1)^2, conic
  BiForm quartic;              // line0 * line1 * conic
  BiPoly image_conic;          // affine image of the ramification component, t = y1/y0
  PlaceSet bad_places;         // fibers without three components in normal crossing
};
QuarticFixture quartic_fixture();

/// Sum over P outside S of deg(P) max(0, ord_P A(u, v)). Throws SectionInsideZ.
long section_pullback_degree(const BiPoly& a, const SUnit& u, const SUnit& v, const PlaceSet& s);

enum class OutcomeKind { BelowThreshold, Relation, BoundHolds, DegenerateOnZ, Violation };
std::string to_string(OutcomeKind kind);
OutcomeKind outcome_kind_from_string(const std::string& text);

/// Classification of one pair of units against the trichotomy. `lhs` and `rhs`
/// (the truncated count and eps * H) are filled for every kind except
/// DegenerateOnZ; only BoundHolds and Violation depend on them.
struct PairOutcome {
  long pair_index = 0;
  OutcomeKind kind = OutcomeKind::BelowThreshold;
  RatFunc u, v;
  long height = 0;
  Rational threshold;
  long lhs = 0;
  Rational rhs;
  bool dependent = false;
  long r = 0, s = 0;
  RatFunc gamma;
  friend bool operator==(const PairOutcome&, const PairOutcome&) = default;
};

/// Throws SectionInsideZ when A(u, v) = 0.
PairOutcome prop_ram_check(const BiPoly& a, const SUnit& u, const SUnit& v, const PlaceSet& s, const Rational& eps,
                           const ThetaLedger& ledger);

}  // namespace ffvojta
