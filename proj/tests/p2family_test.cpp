#include <gtest/gtest.h>

#include <random>

#include "ffvojta/error.hpp"
#include "ffvojta/factor.hpp"
#include "ffvojta/p2family.hpp"
#include "ffvojta/parser.hpp"
#include "test_support.hpp"

using namespace ffvojta;
using namespace ffvojta::testing;

namespace {

RatFunc rf(const char* s) { return parse_ratfunc(s); }

BiForm x(int k) { return BiForm::var(k); }
BiForm y(int k) { return BiForm::var(3 + k); }

SUnit unit(const PlaceSet& s, const char* expr) { return sunit_from_ratfunc(rf(expr), s); }

}  // namespace

TEST(BiDegree, LogCanonical) {
  EXPECT_EQ(log_canonical_bidegree(4, 4), (BiDegree{1, 2}));
  EXPECT_EQ(log_canonical_bidegree(3, 2), (BiDegree{0, 0}));
  EXPECT_EQ(relative_log_canonical_bidegree(4, 0), (BiDegree{1, 0}));
  for (long d = 0; d < 6; ++d)
    for (long l = 0; l < 6; ++l) {
      EXPECT_EQ(log_canonical_bidegree(d + 1, l), (log_canonical_bidegree(d, l) + BiDegree{1, 0}));
      EXPECT_EQ(relative_log_canonical_bidegree(d, l), (log_canonical_bidegree(d, l) + BiDegree{0, 2}));
    }
}

TEST(BiForm, ArithmeticAndBidegree) {
  BiForm f = y(0) * x(0) - y(1) * x(2);
  EXPECT_EQ(f.bidegree(), (BiDegree{1, 1}));
  EXPECT_EQ(f.to_string(), "x0*y0 - x2*y1");
  EXPECT_EQ((f * f).bidegree(), (BiDegree{2, 2}));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_THROW((x(0) + y(0)).bidegree(), Error);
  EXPECT_EQ(x(0).pow(3).partial(0), BiForm(3) * x(0).pow(2));
}

TEST(Jacobian, QuarticFixture) {
  QuarticFixture q = quartic_fixture();
  EXPECT_EQ(q.quartic.bidegree(), (BiDegree{4, 4}));
  BiForm jac = jacobian_ramification(q.g1, q.g2, q.g3);
  BiForm expected = BiForm(8) * y(0).pow(6) * x(0) * x(1) * x(2);
  EXPECT_EQ(jac, expected);
  EXPECT_EQ(jac.to_string(), "8*x0*x1*x2*y0^6");

  // remove the two components inside the boundary; the rest is y0^4 x2,
  // i.e. the component y0^2 x2 up to vertical fibers over y0 = 0
  auto [mono, rest] = monomial_content(jac);
  EXPECT_EQ(rest, BiForm(8));
  BiForm remainder = y(0).pow(4) * x(2);
  EXPECT_EQ(q.line0 * q.line1 * remainder * BiForm(8), jac);
  const BiForm z_component = y(0).pow(2) * x(2);
  EXPECT_EQ(z_component.bidegree(), log_canonical_bidegree(4, 4));
  EXPECT_EQ(remainder.bidegree().a, z_component.bidegree().a);
}

TEST(Jacobian, Diagonal) {
  EXPECT_EQ(jacobian_ramification(x(0).pow(2), x(1).pow(2), x(2).pow(2)), BiForm(8) * x(0) * x(1) * x(2));
  try {
    jacobian_ramification(x(0) + x(1), BiForm(2) * x(0) + BiForm(2) * x(1), x(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateMap);
  }
}

TEST(QuarticFixture, BadPlacesFromGramDeterminant) {
  // conic at y0 = 1, y1 = t: -x0^2 - t^2 x0 x1 - x1^2 + x2^2
  const Poly t2 = rf("t^2").num();
  Poly m01 = t2 * Rational(-1, 2);
  // det [[-1, m01, 0], [m01, -1, 0], [0, 0, 1]] = 1 - m01^2
  Poly det = Poly(1) - m01 * m01;
  auto f = factor(det);
  std::vector<Place> list;
  for (const auto& [p, e] : f.factors) list.push_back(Place::from_irreducible(p));
  list.push_back(Place::infinity());
  EXPECT_EQ(PlaceSet(list), quartic_fixture().bad_places);
}

TEST(QuarticFixture, ImageConicContainsImage) {
  QuarticFixture q = quartic_fixture();
  std::mt19937_64 rng(808);
  for (int iter = 0; iter < 50; ++iter) {
    Rational a0(draw(rng, -5, 5)), a1(draw(rng, 1, 5)), tt(draw(rng, -4, 4));
    Rational a = a0 * a0, b = a1 * a1;
    Rational c = -(a + b) - tt * tt * a0 * a1;
    if (c == 0) continue;
    auto at_t = q.image_conic.at_t(tt);
    Rational X = a / c, Y = b / c, sum = 0;
    for (const auto& [key, coef] : at_t) sum += coef * pow(X, key.first) * pow(Y, key.second);
    EXPECT_EQ(sum, 0);
  }
}

TEST(SectionPullback, Examples) {
  const BiPoly line = parse_bipoly("X+Y+1");
  PlaceSet s = places("0,inf");
  EXPECT_EQ(section_pullback_degree(line, unit(s, "t"), unit(s, "t"), s), 1);
  EXPECT_EQ(section_pullback_degree(line, unit(s, "t^2"), unit(s, "-2*t"), s), 2);
  EXPECT_EQ(section_pullback_degree(parse_bipoly("X+Y"), unit(s, "t"), unit(s, "t"), s), 0);
  PlaceSet s2 = places("0,-1,inf");
  try {
    section_pullback_degree(line, unit(s2, "t"), unit(s2, "-t-1"), s2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SectionInsideZ);
  }
}

TEST(SectionPullback, DominatesTruncatedCount) {
  const BiPoly a = quartic_fixture().image_conic;
  PlaceSet s = places("0,1,inf");
  for (std::uint64_t k = 0; k < 100; ++k) {
    SUnit u = generate_one(s, 6, 809, 2 * k), v = generate_one(s, 6, 809, 2 * k + 1);
    RatFunc value = evaluate(a, as_ratfunc(u), as_ratfunc(v));
    if (value.is_zero()) continue;
    EXPECT_GE(section_pullback_degree(a, u, v, s), trunc_count(value, s).total);
  }
}

TEST(PropRam, Branches) {
  const BiPoly line = parse_bipoly("X+Y+1");
  PlaceSet s = places("0,1,inf");
  const Rational eps(1, 2);
  ThetaLedger real = theta_ledger({{1, 1, 0}}, eps);
  PairOutcome low = prop_ram_check(line, unit(s, "t"), unit(s, "t-1"), s, eps, real);
  EXPECT_EQ(low.kind, OutcomeKind::BelowThreshold);

  // lowered thresholds to reach the other branches
  ThetaLedger open = real;
  open.theta1 = 0;
  PairOutcome rel = prop_ram_check(line, unit(s, "t^5"), unit(s, "1/t^5"), s, eps, open);
  EXPECT_EQ(rel.kind, OutcomeKind::Relation);
  EXPECT_EQ(rel.r, 1);
  EXPECT_EQ(rel.s, 1);
  EXPECT_EQ(rel.gamma, RatFunc(1));

  PairOutcome holds = prop_ram_check(line, unit(s, "t^7*(t-1)^2"), unit(s, "t/(t-1)^3"), s, eps, open);
  EXPECT_EQ(holds.kind, OutcomeKind::BoundHolds);
  EXPECT_EQ(holds.height, 9);
  EXPECT_EQ(holds.rhs, Rational(9, 2));

  EXPECT_THROW(prop_ram_check(line, unit(places("0,-1,inf"), "t"), unit(places("0,-1,inf"), "-t-1"),
                              places("0,-1,inf"), eps, real),
               Error);
}
