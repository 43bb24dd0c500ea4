#include <gtest/gtest.h>

#include <functional>

#include "ffvojta/error.hpp"
#include "ffvojta/parser.hpp"
#include "ffvojta/report.hpp"
#include "ffvojta/verify.hpp"
#include "test_support.hpp"

using namespace ffvojta;
using namespace ffvojta::testing;

namespace {

RatFunc rf(const char* s) { return parse_ratfunc(s); }

SUnit unit(const PlaceSet& s, const char* expr) { return sunit_from_ratfunc(rf(expr), s); }

RunConfig config(const char* poly, const char* places, long count) {
  RunConfig c;
  c.poly = poly;
  c.places = places;
  c.count = count;
  c.max_exponent = 12;
  c.seed = 11;
  return c;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

}  // namespace

TEST(Resolve, AttestationAndErrors) {
  for (const char* p : {"X+Y+1", "X*Y-t", "X^2*Y+X*Y^2-t*(X+Y)+1"}) {
    ResolvedConfig r = resolve(config(p, "0,1,inf", 1));
    ASSERT_EQ(r.factors.size(), 1u);
    EXPECT_TRUE(r.factors[0].attested) << p;
  }
  EXPECT_FALSE(resolve(config("X^2-Y^2", "0,1,inf", 1)).factors[0].attested);

  RunConfig split = config("X^2-Y^2", "0,1,inf", 1);
  split.factors = {"X-Y", "X+Y"};
  ResolvedConfig r = resolve(split);
  EXPECT_EQ(r.factors.size(), 2u);
  EXPECT_TRUE(r.factors[0].attested && r.factors[1].attested);

  split.factors = {"X-Y", "X+2*Y"};
  EXPECT_EQ(code_of([&] { resolve(split); }), ErrorCode::InvalidInput);
  RunConfig bad = config("X+Y+1", "0,1,inf", 1);
  bad.epsilon = 0;
  EXPECT_EQ(code_of([&] { resolve(bad); }), ErrorCode::InvalidInput);
  bad = config("X+Y+1", "0,1,inf", -1);
  EXPECT_EQ(code_of([&] { resolve(bad); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { resolve(config("X+", "0,inf", 1)); }), ErrorCode::ParseError);

  // coefficients are made units by growing the place set
  EXPECT_EQ(resolve(config("X*Y-(t-3)", "0,inf", 1)).effective, places("0,3,inf"));
}

TEST(Verify, FixturesHaveNoViolation) {
  for (const char* p : {"X+Y+1", "X*Y-t", "X^2*Y+X*Y^2-t*(X+Y)+1"}) {
    VerifyRun run = verify_th12(config(p, "0,1,inf", 60));
    ASSERT_EQ(run.outcomes.size(), 60u);
    for (size_t k = 0; k < run.outcomes.size(); ++k) {
      EXPECT_EQ(run.outcomes[k].pair_index, static_cast<long>(k));
      EXPECT_NE(run.outcomes[k].kind, OutcomeKind::Violation) << p;
    }
  }
}

TEST(Verify, WorkerCountDoesNotChangeReport) {
  RunConfig c = config("X*Y-t", "0,1,-1,inf", 40);
  const std::string one = emit_report(verify_th12(c));
  c.workers = 4;
  EXPECT_EQ(emit_report(verify_th12(c)), one);
}

TEST(Verify, UnitPairOnLine) {
  // (t^2, -2t) on X+Y+1 gives (t-1)^2: one repeated zero against eps * 2
  PlaceSet s = places("0,inf");
  ThetaLedger ledger = theta_ledger({{1, 1, 0}}, Rational(1, 2));
  ledger.theta1 = 0;
  PairOutcome o = prop_ram_check(parse_bipoly("X+Y+1"), unit(s, "t^2"), unit(s, "-2*t"), s, Rational(1, 2), ledger);
  EXPECT_EQ(o.lhs, 1);
  EXPECT_EQ(o.rhs, 1);
  // the pair is dependent, (1, -2) with gamma = 1/4
  EXPECT_EQ(o.kind, OutcomeKind::Relation);
  EXPECT_EQ(o.gamma, RatFunc(Rational(1, 4)));
}

TEST(Report, EmptyAndKinds) {
  VerifyRun run = verify_th12(config("X+Y+1", "0,1,inf", 0));
  Json j = report_json(run);
  EXPECT_EQ(j["schema"], "ffvojta-report/1");
  EXPECT_TRUE(j["outcomes"].empty());
  EXPECT_EQ(j["summary"]["counts"]["violation"], 0);
  EXPECT_EQ(j["summary"]["ledger"]["factors"][0]["c3"], "12");

  VerifyRun one = verify_th12(config("X+Y+1", "0,1,inf", 1));
  Json k = report_json(one);
  EXPECT_EQ(k["outcomes"][0]["kind"], "below_threshold");
  EXPECT_EQ(k["summary"]["counts"]["below_threshold"], 1);
}

TEST(Report, RoundTrip) {
  for (const char* p : {"X+Y+1", "X*Y-t"}) {
    RunConfig c = config(p, "0,1,inf", 30);
    c.factors = {p};
    VerifyRun run = verify_th12(c);
    const std::string text = emit_report(run);
    VerifyRun back = parse_report(text);
    EXPECT_EQ(back, run);
    EXPECT_EQ(emit_report(back), text);
  }
  // relation and degenerate outcomes carry extra fields
  PairOutcome o;
  o.pair_index = 3;
  o.kind = OutcomeKind::Relation;
  o.u = rf("t^2/(t-1)");
  o.v = rf("-3*t");
  o.height = 2;
  o.threshold = Rational(7, 3);
  o.lhs = 1;
  o.rhs = Rational(1, 2);
  o.dependent = true;
  o.r = 1;
  o.s = -2;
  o.gamma = rf("1/(9*(t-1))");
  EXPECT_EQ(outcome_from_json(to_json(o)), o);
  o.kind = OutcomeKind::DegenerateOnZ;
  o.lhs = 0;
  o.rhs = 0;
  EXPECT_EQ(outcome_from_json(to_json(o)), o);

  EXPECT_EQ(code_of([] { parse_report("{\"schema\": \"other/2\"}"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_report("not json"); }), ErrorCode::ParseError);
}

TEST(Audit, LineWithSplitResultants) {
  RunConfig c = config("X+Y+1", "0,inf", 1);
  PlaceSet s = places("0,inf");
  AuditReport a = audit_steps(c, unit(s, "t^2"), unit(s, "-2*t"));
  EXPECT_TRUE(a.coprime);
  EXPECT_LE(a.deg_f, 2);
  EXPECT_LE(a.deg_g, 2);
  EXPECT_TRUE(a.step2_degrees_hold);
  EXPECT_TRUE(a.step2_heights_hold);
  ASSERT_EQ(a.z_set.size(), 1u);
  EXPECT_EQ(a.z_set[0].first, RatFunc(1));
  EXPECT_EQ(a.z_set[0].second, RatFunc(-2));
  ASSERT_EQ(a.rows.size(), 1u);
  EXPECT_EQ(a.rows[0].place, Place::at(1));
  EXPECT_EQ(a.rows[0].ord_a, 2);
  EXPECT_EQ(a.rows[0].ord_b, 1);
  EXPECT_EQ(a.rows[0].rhs, 1);
  EXPECT_TRUE(a.rows[0].holds);
  Json j = to_json(a);
  EXPECT_TRUE(j["split_case_only"].get<bool>());
}

TEST(Audit, StepOneRelation) {
  RunConfig c = config("X*Y-1", "0,inf", 1);
  PlaceSet s = places("0,inf");
  // B = 3 X Y is coprime to A here
  EXPECT_TRUE(audit_steps(c, unit(s, "t"), unit(s, "t^2")).coprime);
  AuditReport rel = audit_steps(c, unit(s, "t"), unit(s, "2/t"));
  EXPECT_FALSE(rel.coprime);
  EXPECT_EQ(rel.r, 1);
  EXPECT_EQ(rel.s, 1);
  EXPECT_EQ(rel.gamma, RatFunc(2));
}

TEST(Audit, Errors) {
  PlaceSet s = places("0,inf");
  EXPECT_EQ(code_of([&] { audit_steps(config("X^2+Y-t", "0,inf", 1), unit(s, "t"), unit(s, "t^3")); }),
            ErrorCode::NotSplit);
  EXPECT_EQ(code_of([&] { audit_steps(config("X^2-Y^2", "0,inf", 1), unit(s, "t"), unit(s, "t^3")); }),
            ErrorCode::NotIrreducibleAttested);
  EXPECT_EQ(code_of([&] { audit_steps(config("X-Y", "0,inf", 1), unit(s, "t"), unit(s, "t")); }),
            ErrorCode::SectionInsideZ);
}

TEST(Audit, RandomSplitCasesHoldPointwise) {
  int audited = 0;
  PlaceSet s = places("0,1,inf");
  for (std::uint64_t k = 0; k < 40; ++k) {
    SUnit u = generate_one(s, 4, 77, 2 * k), v = generate_one(s, 4, 77, 2 * k + 1);
    try {
      AuditReport a = audit_steps(config("X+Y+1", "0,1,inf", 1), u, v);
      for (const auto& row : a.rows) EXPECT_TRUE(row.holds);
      for (const auto& g : a.gcd_checks) EXPECT_TRUE(g.holds);
      if (a.coprime) EXPECT_TRUE(a.step2_degrees_hold);
      ++audited;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::NotSplit || e.code() == ErrorCode::SectionInsideZ) << e.what();
    }
  }
  EXPECT_GT(audited, 0);
}
