#pragma once

#include <string>
#include <vector>

#include "ffvojta/rational.hpp"

namespace ffvojta {

/// Constants for a single irreducible factor. Entries with a cube root are
/// stored as exact cubes; the decimal string is for display only.
struct IrredLedger {
  long deg_x = 0, deg_y = 0, h = 0;
  Rational eps;
  Rational c3, c4, c5, c6, c_v;
  Rational c7_cubed;
  std::string c7_decimal;
  Rational c8, c9, c10, c1, c2;
  Rational step5_threshold;  // 2 c3 c4
  friend bool operator==(const IrredLedger&, const IrredLedger&) = default;
};

/// Constants for a pair of factors of total degrees deg1, deg2.
struct PairLedger {
  long deg1 = 0, deg2 = 0, h1 = 0, h2 = 0;
  Rational eps;
  Rational d3, d4, d5, d6, d_v;
  Rational d7_cubed;
  std::string d7_decimal;
  Rational d8, d1, d2;
  friend bool operator==(const PairLedger&, const PairLedger&) = default;
};

struct FactorShape {
  long deg_x = 0, deg_y = 0, h = 0;
};

struct ThetaLedger {
  Rational eps, eps_prime;
  long deg_a = 0;
  std::vector<IrredLedger> factors;
  std::vector<std::pair<size_t, size_t>> pair_indices;
  std::vector<PairLedger> pairs;
  Rational theta1, theta2;
  std::string theta1_source, theta2_source;  // "C1[i]" or "D1[i,j]" etc.
  friend bool operator==(const ThetaLedger&, const ThetaLedger&) = default;
};

/// Throws InvalidInput.
IrredLedger irred_ledger(long deg_x, long deg_y, long h, const Rational& eps);
PairLedger pair_ledger(long deg1, long deg2, long h1, long h2, const Rational& eps);
/// Every factor and every pair i < j, evaluated at eps / (2 (deg A + 1)^2).
/// Throws EmptyFactorization.
ThetaLedger theta_ledger(const std::vector<FactorShape>& factors, const Rational& eps);

/// max{2 m deg_pi ((n-1)(n-2) + 2/deg_pi + h_mu), c3}. Throws InvalidInput.
Rational c2_unit_sum(long m, long deg_pi, long n, long h_mu, const Rational& c3);

/// Cube root of a nonnegative rational, truncated to `digits` decimals.
std::string cube_root_decimal(const Rational& cube, int digits = 12);

}  // namespace ffvojta
