#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffvojta/ratfunc.hpp"

namespace ffvojta {

/// Closed point of P^1 over Q: a monic irreducible polynomial or infinity.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Checks monic-ness is not required (the polynomial is made monic) but
  /// irreducibility is; degrees above 8 are rejected. Throws InvalidPlace.
  static Place finite(const Poly& p);
  /// The place t - a.
  static Place at(const Rational& a);
  /// Skips the irreducibility check; p must be monic irreducible.
  static Place from_irreducible(Poly p);

  bool is_infinity() const { return poly_.is_zero(); }
  /// Monic irreducible polynomial; the zero polynomial for infinity.
  const Poly& poly() const { return poly_; }
  int degree() const { return is_infinity() ? 1 : poly_.degree(); }
  /// For a degree-1 place t - a, returns a.
  std::optional<Rational> root() const;

  /// Degree first; within a degree by the coefficients of (-1)^d p(-t),
  /// lowest first (so t - 1 < t - 2); infinity last.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);
  friend bool operator==(const Place& a, const Place& b) = default;

  /// "inf", "a" for t - a, otherwise the polynomial.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Place& p) { return os << p.to_string(); }

 private:
  Place() = default;
  explicit Place(Poly p) : poly_(std::move(p)) {}
  Poly poly_;
};

/// Inverse of Place::to_string; also accepts any polynomial expression in t.
Place parse_place(std::string_view text);

using Divisor = std::map<Place, long>;

long degree(const Divisor& d);

/// Finite set of places, kept sorted and unique.
class PlaceSet {
 public:
  PlaceSet() = default;
  explicit PlaceSet(std::vector<Place> places);

  std::span<const Place> places() const { return places_; }
  bool contains(const Place& p) const;
  bool has_infinity() const { return !places_.empty() && places_.back().is_infinity(); }
  std::vector<Place> finite_places() const;
  /// Sum of geometric degrees.
  long geometric_size() const;
  bool empty() const { return places_.empty(); }
  size_t size() const { return places_.size(); }

  PlaceSet united(const PlaceSet& o) const;

  friend bool operator==(const PlaceSet&, const PlaceSet&) = default;

  /// Comma-separated place list, e.g. "0,1,inf".
  std::string to_string() const;

 private:
  std::vector<Place> places_;
};

/// Comma-separated list of place literals, e.g. "0,1,inf" or "t^2+1,inf".
PlaceSet parse_place_set(std::string_view text);

/// Throws ZeroFunction for f = 0.
long ord_at(const RatFunc& f, const Place& p);
/// max(deg num, deg den). Throws ZeroFunction.
long height(const RatFunc& f);
/// -sum over places of deg(P) * min_i ord_P(f_i); zero entries are ignored.
/// Throws AllZero.
long proj_height(std::span<const RatFunc> fs);
/// Principal divisor; factors numerator and denominator over Q.
Divisor divisor_of(const RatFunc& f);

/// Meromorphic differential dt / denominator with two simple geometric poles.
struct OmegaForm {
  std::vector<Place> polar_places;
  Poly denominator;

  std::string to_string() const;
};

/// Deterministic choice of polar places inside S: the smallest degree-1
/// finite place together with infinity, else the two smallest degree-1
/// finite places, else the smallest degree-2 place. Throws STooSmall.
OmegaForm choose_omega(const PlaceSet& s);

/// f' with df = f' * omega, i.e. (df/dt) * denominator.
RatFunc deriv_omega(const RatFunc& f, const OmegaForm& w);

}  // namespace ffvojta
