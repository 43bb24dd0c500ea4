#include <gtest/gtest.h>

#include <cmath>

#include "ffvojta/constants.hpp"
#include "ffvojta/error.hpp"

using namespace ffvojta;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(IrredLedger, GoldenValues) {
  for (const Rational& eps : {q(1, 2), q(1), q(3, 7)}) {
    IrredLedger l = irred_ledger(1, 1, 1, eps);
    EXPECT_EQ(l.c3, 14);
    EXPECT_EQ(l.c4, 2);
    EXPECT_EQ(l.c5, 118);
    EXPECT_EQ(l.c6, 228);
    EXPECT_EQ(l.c_v, 2916);
    EXPECT_EQ(l.step5_threshold, 56);
  }
  EXPECT_EQ(irred_ledger(1, 1, 0, q(1)).c3, 12);
  EXPECT_EQ(irred_ledger(2, 1, 0, q(1)).c4, 4);
}

TEST(IrredLedger, DerivedEntries) {
  const Rational eps = q(1, 2);
  IrredLedger l = irred_ledger(1, 1, 1, eps);
  // 27 * 32 * 2^8 * (118 + 2916)
  EXPECT_EQ(l.c7_cubed, Rational(27L * 32 * 256 * 3034));
  // C(9, 2) * 2917
  EXPECT_EQ(l.c8, Rational(36 * 2917));
  EXPECT_EQ(l.c10, 4 * 2 * Rational(36 * 2917) / eps);
  EXPECT_EQ(l.c9, 8 * l.c7_cubed / (eps * eps * eps));
  EXPECT_EQ(l.c1, max(l.c9, l.c10));
  EXPECT_EQ(l.c2, 8 * 8 / eps);
  const double approx = 3 * std::cbrt(32.0) * std::pow(2.0, 8.0 / 3) * std::cbrt(3034.0);
  EXPECT_NEAR(std::stod(l.c7_decimal), approx, 1e-6 * approx);

  // degenerate bidegree: c4 = 0 and c2 falls back to deg A
  IrredLedger flat = irred_ledger(2, 0, 3, q(1));
  EXPECT_EQ(flat.c4, 0);
  EXPECT_EQ(flat.c2, 2);
  EXPECT_EQ(flat.c7_decimal, "0.000000000000");
}

TEST(IrredLedger, Errors) {
  EXPECT_THROW(irred_ledger(0, 0, 1, q(1)), Error);
  EXPECT_THROW(irred_ledger(1, 1, 1, q(0)), Error);
  EXPECT_THROW(irred_ledger(1, 1, -1, q(1)), Error);
}

TEST(PairLedger, GoldenValues) {
  PairLedger l = pair_ledger(1, 1, 0, 0, q(1));
  EXPECT_EQ(l.d3, 0);
  EXPECT_EQ(l.d4, 4);
  EXPECT_EQ(l.d5, 12);
  EXPECT_EQ(l.d6, 8);
  EXPECT_EQ(l.d_v, 8);
  EXPECT_EQ(pair_ledger(1, 1, 1, 1, q(1)).d3, 8);
  EXPECT_EQ(pair_ledger(2, 2, 0, 0, q(1)).d4, 16);
  EXPECT_EQ(l.d2, 8 * 64);
  EXPECT_EQ(l.d8, Rational(6 * 9));
  EXPECT_THROW(pair_ledger(0, 1, 0, 0, q(1)), Error);
}

TEST(ThetaLedger, SingleFactor) {
  const Rational eps = q(1, 2);
  ThetaLedger t = theta_ledger({{1, 1, 1}}, eps);
  EXPECT_EQ(t.deg_a, 2);
  EXPECT_EQ(t.eps_prime, q(1, 36));
  IrredLedger direct = irred_ledger(1, 1, 1, q(1, 36));
  EXPECT_EQ(t.theta1, direct.c1);
  EXPECT_EQ(t.theta2, max(Rational(2), 8 * 8 / q(1, 36)));
  EXPECT_EQ(t.theta1_source, "C1[0]");
  EXPECT_TRUE(t.pairs.empty());
  EXPECT_THROW(theta_ledger({}, eps), Error);
}

TEST(ThetaLedger, PairsEnter) {
  const Rational eps = q(1);
  ThetaLedger one = theta_ledger({{1, 1, 0}}, eps);
  ThetaLedger two = theta_ledger({{1, 1, 0}, {1, 1, 0}}, eps);
  ASSERT_EQ(two.pairs.size(), 1u);
  EXPECT_EQ(two.eps_prime, q(1, 50));
  EXPECT_GE(two.theta2, one.theta2);
  EXPECT_GE(two.theta1, one.theta1);
  EXPECT_EQ(two.theta2, max(two.factors[0].c2, two.pairs[0].d2));

  ThetaLedger mixed = theta_ledger({{1, 1, 0}, {1, 1, 1}}, eps);
  EXPECT_EQ(mixed.pairs[0].d3, 2 * 4 * 1);
  EXPECT_EQ(mixed.theta2_source, "D2[0,1]");
  EXPECT_GE(mixed.theta2, mixed.deg_a);
}

TEST(Constants, C2UnitSum) {
  EXPECT_EQ(c2_unit_sum(1, 1, 3, 0, q(0)), 8);
  EXPECT_EQ(c2_unit_sum(1, 2, 3, 0, q(0)), 12);
  EXPECT_EQ(c2_unit_sum(1, 1, 3, 0, q(100)), 100);
  EXPECT_EQ(c2_unit_sum(2, 3, 4, 1, q(0)), 2 * 2 * 3 * (6 + q(2, 3) + 1));
  EXPECT_THROW(c2_unit_sum(1, 1, 2, 0, q(0)), Error);
}

TEST(Constants, CubeRootDecimal) {
  EXPECT_EQ(cube_root_decimal(q(27), 3), "3.000");
  EXPECT_EQ(cube_root_decimal(q(1, 8), 2), "0.50");
  for (long n : {2L, 3L, 10L, 12345L, 999999937L}) {
    const std::string d = cube_root_decimal(q(n));
    const double x = std::stod(d);
    EXPECT_NEAR(x * x * x, static_cast<double>(n), 1e-9 * static_cast<double>(n) + 1e-9);
    // truncation: d^3 <= n < (d + 1e-12)^3
    Rational lo(d.substr(0, d.find('.')) + d.substr(d.find('.') + 1) + "/1000000000000");
    lo.canonicalize();
    EXPECT_LE(lo * lo * lo, q(n));
    Rational hi = lo + q(1, 1000000000000L);
    EXPECT_GT(hi * hi * hi, q(n));
  }
}

TEST(Constants, MonotoneOverGrid) {
  auto entries = [](const IrredLedger& l) {
    return std::vector<Rational>{l.c3, l.c4, l.c5, l.c6, l.c_v, l.c7_cubed, l.c8, l.c9, l.c10, l.c1, l.c2};
  };
  auto pair_entries = [](const PairLedger& l) {
    return std::vector<Rational>{l.d3, l.d4, l.d5, l.d6, l.d_v, l.d7_cubed, l.d8, l.d1, l.d2};
  };
  auto le = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  };
  const std::vector<Rational> epss = {q(1, 5), q(1, 3), q(1, 2), q(1)};
  int tuples = 0;
  for (long dx = 0; dx <= 3; ++dx)
    for (long dy = 0; dy <= 2; ++dy)
      for (long h = 0; h <= 2; ++h) {
        if (dx + dy == 0) continue;
        for (size_t e = 0; e < epss.size(); ++e) {
          ++tuples;
          auto base = entries(irred_ledger(dx, dy, h, epss[e]));
          EXPECT_TRUE(le(base, entries(irred_ledger(dx + 1, dy, h, epss[e]))));
          EXPECT_TRUE(le(base, entries(irred_ledger(dx, dy + 1, h, epss[e]))));
          EXPECT_TRUE(le(base, entries(irred_ledger(dx, dy, h + 1, epss[e]))));
          if (e > 0) EXPECT_TRUE(le(base, entries(irred_ledger(dx, dy, h, epss[e - 1]))));
          if (dx >= 1 && dy >= 1) {
            auto pb = pair_entries(pair_ledger(dx, dy, h, 1, epss[e]));
            EXPECT_TRUE(le(pb, pair_entries(pair_ledger(dx + 1, dy, h, 1, epss[e]))));
            EXPECT_TRUE(le(pb, pair_entries(pair_ledger(dx, dy + 1, h, 1, epss[e]))));
            EXPECT_TRUE(le(pb, pair_entries(pair_ledger(dx, dy, h + 1, 1, epss[e]))));
            if (e > 0) EXPECT_TRUE(le(pb, pair_entries(pair_ledger(dx, dy, h, 1, epss[e - 1]))));
          }
        }
      }
  EXPECT_GE(tuples, 100);
}
