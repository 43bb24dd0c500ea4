#pragma once

#include <optional>
#include <vector>

#include "ffvojta/counting.hpp"

namespace ffvojta {

/// w_1 + ... + w_n = 0 with every w_i an S-unit and no proper subsum zero.
struct VanishingSum {
  std::vector<RatFunc> terms;
  PlaceSet place_set;
};

/// (l-1)(l-2)/2, and 0 at l = 0.
long gamma(long l);

/// Number of terms with ord_P = 0. Throws ZeroFunction.
long m_at(const std::vector<RatFunc>& ws, const Place& p);

struct DeficitRow {
  Place place;
  long m = 0;
  long deficit = 0;  // gamma_n - gamma_m, per geometric point
};

struct BmCheck {
  BoundCheck bound;
  std::vector<DeficitRow> deficits;  // places of S with nonzero deficit
};

/// H(w_1 : ... : w_n) <= sum_P deg(P) (gamma_n - gamma_{m_P}) in genus 0.
/// Throws InvalidInput (n < 3 or n > 20), NotUnit, SumNonzero, VanishingSubsum.
BmCheck check_bm(const VanishingSum& vs);

/// n - 1 seeded units of S, the last term is minus their sum and S grows to
/// its support. Empty when the draw is degenerate.
std::optional<VanishingSum> make_vanishing_sum(const PlaceSet& s, long n, long max_exponent, std::uint64_t seed,
                                               std::uint64_t index);

}  // namespace ffvojta
