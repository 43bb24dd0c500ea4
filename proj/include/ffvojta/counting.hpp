#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "ffvojta/sunits.hpp"

namespace ffvojta {

/// Multiple zeros outside S: total = sum of deg(P) * per_place[P].
struct CountReport {
  long total = 0;
  std::map<Place, long> per_place;  // max(0, ord_P f - 1), nonzero entries only
};

/// Throws ZeroFunction.
CountReport trunc_count(const RatFunc& f, const PlaceSet& s);

/// Sum over P outside S of deg(P) * min(ord_P f, ord_P g). Throws NotSInteger
/// naming the first pole outside S, or ZeroFunction.
long min_ord_sum(const RatFunc& f, const RatFunc& g, const PlaceSet& s);

/// min_ord_sum(u - alpha, v - beta, V). Throws ZeroDifference.
long gcd_units_sum(const RatFunc& u, const RatFunc& alpha, const RatFunc& v, const RatFunc& beta, const PlaceSet& v_set);

/// Outcome of an inequality check. When `cubed` is set both sides are the
/// cubes of the quantities being compared.
struct BoundCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool cubed = false;
  std::string detail;
};

/// Gcd bound for the V-units u/alpha and v/beta: if they are independent
/// modulo constants, lhs^3 <= 54 H^2 chi_V; otherwise lhs <= H / max(|r|, |s|)
/// for the generating relation. H is the larger height of the two quotients.
/// Throws ConstantQuotient or NotUnit.
BoundCheck check_cz_gcd_bound(const RatFunc& u, const RatFunc& alpha, const RatFunc& v, const RatFunc& beta,
                              const PlaceSet& v_set);
BoundCheck check_cz_gcd_bound(const RatFunc& u, const RatFunc& alpha, const RatFunc& v, const RatFunc& beta,
                              const PlaceSet& v_set, const DependenceResult& dependence);

/// Lower bound for the zeros of a sum of V-units outside V:
/// sum_{P not in V} max(0, ord_P sum) >= H(theta_1 : ... : theta_M) - C(M, 2) chi_V.
/// Throws VanishingSubsum (naming the subset), NotUnit, InvalidInput for M > 20.
BoundCheck check_zannier_bound(std::span<const RatFunc> monomials, const PlaceSet& v_set);

/// Index list of a nonempty subset with vanishing sum, if any (M <= 20).
std::optional<std::vector<size_t>> find_vanishing_subsum(std::span<const RatFunc> terms, bool include_full);

/// Sum over P outside S of deg(P) * max(0, ord_P f) for f != 0.
long zeros_outside(const RatFunc& f, const PlaceSet& s);

}  // namespace ffvojta
