#pragma once

#include <utility>
#include <vector>

#include "ffvojta/poly.hpp"

namespace ffvojta {

struct Factorization {
  Rational unit;                               // leading coefficient of the input
  std::vector<std::pair<Poly, int>> factors;   // monic irreducible over Q, sorted
};

/// Complete factorization over Q (big-prime Zassenhaus: Cantor-Zassenhaus
/// modulo a prime above the Landau-Mignotte bound, then exhaustive
/// recombination). Multiplicities come from repeated division, not from a
/// square-free decomposition. Throws ZeroPolynomial.
Factorization factor(const Poly& p);

bool is_irreducible(const Poly& p);

/// Rational roots of p, each listed once, ascending.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace ffvojta
