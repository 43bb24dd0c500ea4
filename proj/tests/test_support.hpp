#pragma once

#include <random>
#include <vector>

#include "ffvojta/bipoly.hpp"
#include "ffvojta/place.hpp"
#include "ffvojta/sunits.hpp"

namespace ffvojta::testing {

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Poly random_poly(std::mt19937_64& rng, int deg, long range) {
  std::vector<Rational> v;
  for (int k = 0; k <= deg; ++k) v.emplace_back(draw(rng, -range, range));
  if (v.back() == 0) v.back() = 1;
  return Poly(std::move(v));
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, int max_deg = 3, long range = 5) {
  Poly num = random_poly(rng, static_cast<int>(draw(rng, 0, max_deg)), range);
  Poly den = random_poly(rng, static_cast<int>(draw(rng, 0, max_deg)), range);
  return RatFunc(num, den);
}

inline RatFunc nonzero_ratfunc(std::mt19937_64& rng, int max_deg = 3, long range = 5) {
  for (;;) {
    RatFunc f = random_ratfunc(rng, max_deg, range);
    if (!f.is_zero()) return f;
  }
}

inline BiPoly random_bipoly(std::mt19937_64& rng, int max_deg = 2, int coeff_deg = 1) {
  BiPoly a;
  while (a.is_zero()) {
    for (int i = 0; i <= max_deg; ++i)
      for (int j = 0; i + j <= max_deg; ++j)
        if (rng() % 2) a += BiPoly::monomial(random_ratfunc(rng, coeff_deg, 3), i, j);
  }
  return a;
}

inline PlaceSet places(const char* text) { return parse_place_set(text); }

}  // namespace ffvojta::testing
