#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ffvojta/place.hpp"

namespace ffvojta {

/// chi_S of P^1: geometric size of S minus 2.
long euler_char(const PlaceSet& s);

/// constant * prod p^e over finite places. The order at infinity is implied.
struct SUnit {
  Rational constant{1};
  std::map<Place, long> exponents;  // finite places only, no zero entries

  long infinity_order() const;
  friend bool operator==(const SUnit&, const SUnit&) = default;
};

/// Validates the unit against S; throws InvalidUnit.
SUnit make_sunit(const PlaceSet& s, Rational constant, std::map<Place, long> exponents);
/// Factors f and checks its divisor is supported in S; throws NotUnit.
SUnit sunit_from_ratfunc(const RatFunc& f, const PlaceSet& s);
/// Throws InvalidUnit unless the unit's divisor lies in S.
void validate(const SUnit& u, const PlaceSet& s);

RatFunc as_ratfunc(const SUnit& u);
SUnit operator*(const SUnit& a, const SUnit& b);
SUnit pow(const SUnit& u, long e);

/// theta_u with du/u = theta_u * omega.
RatFunc theta(const SUnit& u, const OmegaForm& w);

struct DependenceResult {
  bool dependent = false;
  long r = 0;
  long s = 0;
  RatFunc gamma;  // u^r v^s when dependent
};

/// Z-linear dependence of exponent vectors; (r, s) primitive with r > 0, or
/// r = 0 and s > 0.
DependenceResult mult_dependence(const SUnit& u, const SUnit& v);

/// Deterministic pseudo-random units; unit k depends only on (seed, k).
std::vector<SUnit> generate(const PlaceSet& s, long max_exponent, long count, std::uint64_t seed);
SUnit generate_one(const PlaceSet& s, long max_exponent, std::uint64_t seed, std::uint64_t index);

/// S together with every zero and pole of the given functions.
PlaceSet enlarge_for_coefficients(const PlaceSet& s, std::span<const RatFunc> fs);

/// Places of the divisor of f (zeros and poles).
PlaceSet support(const RatFunc& f);

}  // namespace ffvojta
