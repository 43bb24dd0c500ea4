// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ffvojta/bipoly.hpp"
#include "ffvojta/constants.hpp"
#include "ffvojta/counting.hpp"
#include "ffvojta/error.hpp"
#include "ffvojta/factor.hpp"
#include "ffvojta/p2family.hpp"
#include "ffvojta/parser.hpp"
#include "ffvojta/report.hpp"
#include "ffvojta/unitsum.hpp"
#include "ffvojta/verify.hpp"
#include "test_support.hpp"

using namespace ffvojta;
using namespace ffvojta::testing;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

RatFunc rf(const char* s) { return parse_ratfunc(s); }

Result fail(std::string why) { return {false, std::move(why)}; }

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

bool poles_simple(const RatFunc& f) {
  if (f.is_zero()) return true;
  if (gcd(f.den(), f.den().derivative()).degree() > 0) return false;
  return f.num().degree() - f.den().degree() <= 1;
}

Result derivation_bound() {
  long checked = 0;
  for (const char* text : {"0,inf", "0,1,inf", "0,1,-1,inf"}) {
    const PlaceSet s = places(text);
    const OmegaForm w = choose_omega(s);
    const long chi = euler_char(s);
    for (const auto& u : generate(s, 10, 1000, 101)) {
      const RatFunc th = theta(u, w);
      if (!th.is_zero() && height(th) > chi) return fail("H(theta) > chi_S for " + str(as_ratfunc(u)) + " over " + text);
      if (!poles_simple(th)) return fail("non-simple pole of theta for " + str(as_ratfunc(u)));
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " units"};
}

Result b_identity() {
  std::mt19937_64 rng(202);
  const std::vector<PlaceSet> sets = {places("0,inf"), places("0,1,inf"), places("0,1,-1,inf"), places("t^2+1,inf"),
                                      places("0,1,2")};
  for (int k = 0; k < 200; ++k) {
    const PlaceSet& s = sets[static_cast<size_t>(k) % sets.size()];
    const OmegaForm w = choose_omega(s);
    const BiPoly a = random_bipoly(rng, 3, 2);
    const SUnit u = generate_one(s, 6, 202, static_cast<std::uint64_t>(2 * k));
    const SUnit v = generate_one(s, 6, 202, static_cast<std::uint64_t>(2 * k + 1));
    const RatFunc uf = as_ratfunc(u), vf = as_ratfunc(v);
    if (deriv_omega(evaluate(a, uf, vf), w) != evaluate(b_polynomial(a, u, v, w), uf, vf))
      return fail("identity fails for A = " + a.to_string());
  }
  return {true, "200 instances"};
}

long trunc_oracle(const RatFunc& f, const PlaceSet& s) {
  long total = 0;
  for (const auto& [p, m] : factor(f.num()).factors) {
    if (s.contains(Place::from_irreducible(p))) continue;
    total += static_cast<long>(p.degree()) * std::max(0, m - 1);
  }
  if (!s.has_infinity()) total += std::max(0L, ord_at(f, Place::infinity()) - 1);
  return total;
}

RatFunc random_product(std::mt19937_64& rng) {
  static const std::vector<Poly> blocks = {
      rf("t").num(),     rf("t-1").num(),     rf("t+1").num(),     rf("t-2").num(),   rf("2*t+3").num(),
      rf("t^2+1").num(), rf("t^2-2").num(),   rf("t^2+t+1").num(), rf("t^3-2").num(), rf("t^3+t+1").num(),
  };
  Poly num(Rational(draw(rng, 1, 5)));
  Poly den(1);
  for (const auto& b : blocks) {
    const long e = draw(rng, -1, 4);
    if (e > 0 && num.degree() + e * b.degree() <= 12)
      for (long k = 0; k < e; ++k) num *= b;
    else if (e < 0)
      den *= b;
  }
  return RatFunc(num, den);
}

Result trunc_oracle_match() {
  const RatFunc fixture = rf("t^2") + rf("-2*t") + RatFunc(1);
  if (fixture != rf("(t-1)^2")) return fail("fixture sum is " + str(fixture));
  if (trunc_count(fixture, places("0,inf")).total != 1) return fail("fixture count is not 1");
  std::mt19937_64 rng(303);
  const std::vector<PlaceSet> sets = {places("0,inf"), places("0,1,inf"), places("0,1,-1,inf"),
                                      places("0,1"),   places("t^2+1,inf"), places("2,t^2-2")};
  for (int k = 0; k < 500; ++k) {
    const RatFunc f = random_product(rng);
    const PlaceSet& s = sets[rng() % sets.size()];
    const long got = trunc_count(f, s).total, want = trunc_oracle(f, s);
    if (got != want) return fail(str(f) + ": " + std::to_string(got) + " vs oracle " + std::to_string(want));
  }
  return {true, "fixture + 500 instances"};
}

RunConfig trichotomy_config(const char* poly, unsigned workers) {
  RunConfig cfg;
  cfg.poly = poly;
  cfg.places = "0,1,inf";
  cfg.epsilon = Rational(1, 2);
  cfg.count = 1000;
  cfg.max_exponent = 25;
  cfg.seed = 7;
  cfg.workers = workers;
  return cfg;
}

std::vector<std::string> reports_w1;

Result trichotomy() {
  std::string detail;
  for (const char* poly : {"X+Y+1", "X*Y-t"}) {
    const VerifyRun run = verify_th12(trichotomy_config(poly, 1));
    reports_w1.push_back(emit_report(run));
    const BiPoly a = parse_bipoly(poly);
    for (const auto& o : run.outcomes) {
      switch (o.kind) {
        case OutcomeKind::DegenerateOnZ:
          // excluded from the trichotomy, but only when the section really lies on A = 0
          if (!evaluate(a, o.u, o.v).is_zero())
            return fail(std::string(poly) + ": degenerate pair " + std::to_string(o.pair_index) + " with A(u,v) != 0");
          break;
        case OutcomeKind::BelowThreshold:
        case OutcomeKind::BoundHolds:
          break;
        case OutcomeKind::Relation:
          if (std::max(std::abs(o.r), std::abs(o.s)) > run.ledger.theta2)
            return fail(std::string(poly) + ": relation exponent above Theta2 at pair " + std::to_string(o.pair_index));
          break;
        default:
          return fail(std::string(poly) + ": " + std::string(to_string(o.kind)) + " at pair " +
                      std::to_string(o.pair_index));
      }
    }
    detail += std::string(detail.empty() ? "" : "; ") + poly + " " + outcome_counts(run.outcomes).dump();
  }
  return {true, detail};
}

Result constants_golden() {
  const IrredLedger c = irred_ledger(1, 1, 1, Rational(1, 2));
  if (!(c.c3 == 14 && c.c4 == 2 && c.c5 == 118 && c.c6 == 228 && c.c_v == 2916))
    return fail("irred ledger " + to_json(c).dump());
  const PairLedger d = pair_ledger(1, 1, 0, 0, Rational(1, 2));
  if (!(d.d3 == 0 && d.d4 == 4 && d.d5 == 12 && d.d6 == 8)) return fail("pair ledger " + to_json(d).dump());
  return {true, "c3..c_v = 14,2,118,228,2916; d3..d6 = 0,4,12,8"};
}

Result brownawell_masser() {
  const BmCheck hand = check_bm({{rf("t"), rf("1-t"), RatFunc(-1)}, places("0,1,inf")});
  if (!(hand.bound.lhs == 1 && hand.bound.rhs == 3 && hand.bound.holds))
    return fail("hand fixture gives " + str(hand.bound.lhs) + " <= " + str(hand.bound.rhs));
  const std::vector<PlaceSet> sets = {places("0,inf"), places("0,1,inf"), places("0,1,-1,inf")};
  int checked = 0;
  for (std::uint64_t k = 0; checked < 500; ++k) {
    const long n = 3 + static_cast<long>(k % 3);
    const auto vs = make_vanishing_sum(sets[k % sets.size()], n, 3, 606, k);
    if (!vs) continue;
    const BmCheck c = check_bm(*vs);
    if (!c.bound.holds) return fail("sum " + std::to_string(k) + ": " + str(c.bound.lhs) + " > " + str(c.bound.rhs));
    ++checked;
  }
  return {true, "fixture 1 <= 3; 500 constructed sums"};
}

Result cz_and_zannier() {
  const std::vector<PlaceSet> sets = {places("0,inf"), places("0,1,inf"), places("0,1,-1,inf")};
  std::mt19937_64 rng(707);
  int cz = 0;
  for (std::uint64_t k = 0; cz < 500; ++k) {
    const PlaceSet& v = sets[rng() % sets.size()];
    const RatFunc x = as_ratfunc(generate_one(v, 4, 707, 4 * k));
    const RatFunc y = rng() % 3 ? as_ratfunc(generate_one(v, 4, 707, 4 * k + 1))
                                : x.pow(draw(rng, -3, 3)) * RatFunc(draw(rng, 1, 3));
    const RatFunc alpha = as_ratfunc(generate_one(v, 2, 707, 4 * k + 2));
    const RatFunc beta = as_ratfunc(generate_one(v, 2, 707, 4 * k + 3));
    if (x.is_constant() || y.is_constant()) continue;
    const BoundCheck b = check_cz_gcd_bound(x * alpha, alpha, y * beta, beta, v);
    if (!b.holds) return fail("gcd bound: " + b.detail);
    ++cz;
  }
  int zannier = 0;
  for (std::uint64_t k = 0; zannier < 500; ++k) {
    const PlaceSet& v = sets[rng() % sets.size()];
    std::vector<RatFunc> terms;
    const long m = draw(rng, 2, 4);
    for (long j = 0; j < m; ++j) terms.push_back(as_ratfunc(generate_one(v, 3, 708, 8 * k + static_cast<std::uint64_t>(j))));
    if (find_vanishing_subsum(terms, true)) continue;
    const BoundCheck b = check_zannier_bound(terms, v);
    if (!b.holds) return fail("zannier bound: " + str(b.lhs) + " > " + str(b.rhs));
    ++zannier;
  }
  return {true, "500 gcd checks, 500 zannier checks"};
}

Result quartic_example() {
  const QuarticFixture q = quartic_fixture();
  const BiForm jac = jacobian_ramification(q.g1, q.g2, q.g3);
  const BiForm expected = BiForm(8) * BiForm::var(3).pow(6) * BiForm::var(0) * BiForm::var(1) * BiForm::var(2);
  if (jac != expected) return fail("jacobian is " + jac.to_string());
  const BiDegree lc = log_canonical_bidegree(4, 4);
  if (!(lc == BiDegree{1, 2})) return fail("log canonical bidegree (" + std::to_string(lc.a) + "," + std::to_string(lc.b) + ")");
  return {true, "jacobian " + jac.to_string() + ", bidegree (1,2)"};
}

Result determinism() {
  if (reports_w1.size() != 2) return fail("trichotomy runs missing");
  size_t k = 0;
  for (const char* poly : {"X+Y+1", "X*Y-t"}) {
    const std::string again = emit_report(verify_th12(trichotomy_config(poly, 1)));
    const std::string wide = emit_report(verify_th12(trichotomy_config(poly, 8)));
    if (again != reports_w1[k]) return fail(std::string(poly) + ": repeated 1-worker run differs");
    if (wide != reports_w1[k]) return fail(std::string(poly) + ": 8-worker report differs");
    ++k;
  }
  return {true, "byte-identical with 1 and 8 workers"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;  // 0 for none
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "derivation bound", 10, derivation_bound},
      {2, "B-polynomial identity", 10, b_identity},
      {3, "truncated count oracle", 30, trunc_oracle_match},
      {4, "trichotomy", 60, trichotomy},
      {5, "constants golden values", 1, constants_golden},
      {6, "Brownawell-Masser", 30, brownawell_masser},
      {7, "gcd and Zannier bounds", 30, cz_and_zannier},
      {8, "quartic example", 5, quartic_example},
      {9, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.ok && c.limit_seconds > 0 && secs > c.limit_seconds) r = fail("took longer than " + str(c.limit_seconds) + " s");
    if (!r.ok) ++failures;
    std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << r.detail << " ["
              << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
