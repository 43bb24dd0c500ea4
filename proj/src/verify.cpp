#include "ffvojta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "ffvojta/error.hpp"
#include "ffvojta/parser.hpp"

namespace ffvojta {

namespace {

constexpr std::uint64_t kAttestSeed = 0x1dea;
constexpr int kAttestTrials = 16;

std::vector<RatFunc> coefficients(const BiPoly& a) {
  std::vector<RatFunc> out;
  for (const auto& [key, c] : a.terms()) out.push_back(c);
  return out;
}

long ratpoly_height(const RatPoly& f) {
  long h = 0;
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) h = std::max(h, height(c));
  return h;
}

// Res_Y(a, b), with the convention Res_Y(a, b) = b^deg_Y(a) when b is free of Y.
RatPoly resultant_in_y(const BiPoly& a, const BiPoly& b) {
  if (b.deg_y() > 0) return resultant_y(a, b);
  const RatPoly base = b.y_coefficients().front();
  RatPoly out(std::vector<RatFunc>{RatFunc(1)});
  for (int k = 0; k < a.deg_y(); ++k) out = out * base;
  return out;
}

long capped_ord(const RatFunc& f, const Place& p) { return f.is_zero() ? kInfiniteOrder : ord_at(f, p); }

PairOutcome classify(const BiPoly& a, const PlaceSet& s, const RunConfig& cfg, const ThetaLedger& ledger, long k) {
  const auto index = static_cast<std::uint64_t>(k);
  const SUnit u = generate_one(s, cfg.max_exponent, cfg.seed, 2 * index);
  const SUnit v = generate_one(s, cfg.max_exponent, cfg.seed, 2 * index + 1);
  PairOutcome out;
  try {
    out = prop_ram_check(a, u, v, s, cfg.epsilon, ledger);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SectionInsideZ) throw;
    out = PairOutcome{};
    out.kind = OutcomeKind::DegenerateOnZ;
    out.u = as_ratfunc(u);
    out.v = as_ratfunc(v);
    out.height = std::max(height(out.u), height(out.v));
    out.threshold = ledger.theta1 * std::max(1L, euler_char(s));
    const DependenceResult dep = mult_dependence(u, v);
    out.dependent = dep.dependent;
    out.r = dep.r;
    out.s = dep.s;
    if (dep.dependent) out.gamma = dep.gamma;
  }
  out.pair_index = k;
  return out;
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Verify: return "verify";
    case Mode::Audit: return "audit";
    case Mode::Constants: return "constants";
    case Mode::Bm: return "bm";
    case Mode::Quartic: return "quartic";
  }
  return "?";
}

Mode mode_from_string(const std::string& text) {
  if (text == "verify") return Mode::Verify;
  if (text == "audit") return Mode::Audit;
  if (text == "constants") return Mode::Constants;
  if (text == "bm" || text == "check-bm") return Mode::Bm;
  if (text == "quartic" || text == "quartic-example") return Mode::Quartic;
  throw Error(ErrorCode::InvalidInput, "unknown mode '" + text + "'");
}

ResolvedConfig resolve(const RunConfig& cfg) {
  if (sgn(cfg.epsilon) <= 0) throw Error(ErrorCode::InvalidInput, "epsilon must be positive");
  if (cfg.count < 0) throw Error(ErrorCode::InvalidInput, "count must be nonnegative");
  if (cfg.max_exponent < 1) throw Error(ErrorCode::InvalidInput, "max_exponent must be >= 1");
  ResolvedConfig r;
  r.poly = parse_bipoly(cfg.poly);
  if (r.poly.is_constant()) throw Error(ErrorCode::InvalidInput, "polynomial must involve X or Y");
  const std::vector<std::string> sources = cfg.factors.empty() ? std::vector<std::string>{cfg.poly} : cfg.factors;
  BiPoly product(RatFunc(1));
  for (const auto& src : sources) {
    BiPoly f = parse_bipoly(src);
    if (f.is_constant()) throw Error(ErrorCode::InvalidInput, "factor '" + src + "' is constant");
    product = product * f;
    r.factors.push_back({src, f.deg_x(), f.deg_y(), poly_height(f), audit_irreducible(f, kAttestTrials, kAttestSeed)});
    r.factor_polys.push_back(std::move(f));
  }
  // the factors must multiply to the polynomial up to a nonzero function of t
  const auto& [key, lead] = *product.terms().rbegin();
  const RatFunc ratio = r.poly.coeff(key.first, key.second) / lead;
  if (ratio.is_zero() || !(BiPoly(ratio) * product == r.poly))
    throw Error(ErrorCode::InvalidInput, "factors do not multiply to " + r.poly.to_string());
  r.places = parse_place_set(cfg.places);
  std::vector<RatFunc> coeffs = coefficients(r.poly);
  for (const auto& f : r.factor_polys) {
    auto more = coefficients(f);
    coeffs.insert(coeffs.end(), more.begin(), more.end());
  }
  r.effective = enlarge_for_coefficients(r.places, coeffs);
  return r;
}

VerifyRun verify_th12(const RunConfig& cfg) {
  const ResolvedConfig rc = resolve(cfg);
  VerifyRun run;
  run.config = cfg;
  run.factors = rc.factors;
  run.effective_places = rc.effective.to_string();
  std::vector<FactorShape> shapes;
  for (const auto& f : rc.factors) shapes.push_back({f.deg_x, f.deg_y, f.h});
  run.ledger = theta_ledger(shapes, cfg.epsilon);
  run.outcomes.resize(static_cast<size_t>(cfg.count));

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(std::max(1L, cfg.count))));
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const long k = next.fetch_add(1);
      if (k >= cfg.count) return;
      try {
        run.outcomes[static_cast<size_t>(k)] = classify(rc.poly, rc.effective, cfg, run.ledger, k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cfg.count;
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return run;
}

AuditReport audit_steps(const RunConfig& cfg, const SUnit& u_unit, const SUnit& v_unit) {
  const ResolvedConfig rc = resolve(cfg);
  if (rc.factors.size() != 1 || !rc.factors.front().attested)
    throw Error(ErrorCode::NotIrreducibleAttested, rc.poly.to_string() + " is not an attested irreducible polynomial");
  const PlaceSet& s = rc.effective;
  validate(u_unit, s);
  validate(v_unit, s);
  AuditReport rep;
  rep.a = rc.poly;
  rep.u = as_ratfunc(u_unit);
  rep.v = as_ratfunc(v_unit);
  const RatFunc value = evaluate(rep.a, rep.u, rep.v);
  if (value.is_zero()) throw Error(ErrorCode::SectionInsideZ, "A(u, v) = 0");
  const OmegaForm w = choose_omega(s);
  rep.b = b_polynomial(rep.a, u_unit, v_unit, w);

  // Step 1: A irreducible and B supported on the monomials of A, so a common
  // factor forces B = a A
  const auto& [top_key, top_coef] = *rep.a.terms().rbegin();
  const RatFunc ratio = rep.b.coeff(top_key.first, top_key.second) / top_coef;
  if (BiPoly(ratio) * rep.a == rep.b) {
    rep.coprime = false;
    rep.step1_ratio = ratio;
    auto it = rep.a.terms().begin();
    const auto [i, j] = it->first;
    const auto [h, k] = std::next(it)->first;
    long r = i - h, sv = j - k;
    const long g = std::gcd(r, sv);
    r /= g;
    sv /= g;
    if (r < 0 || (r == 0 && sv < 0)) {
      r = -r;
      sv = -sv;
    }
    rep.r = r;
    rep.s = sv;
    rep.gamma = rep.u.pow(r) * rep.v.pow(sv);
    return rep;
  }

  const IrredLedger ledger = irred_ledger(rep.a.deg_x(), rep.a.deg_y(), poly_height(rep.a), cfg.epsilon);
  rep.c3_bound = ledger.c3 * std::max(1L, euler_char(s));
  rep.c4 = ledger.c4;
  rep.f = resultant_in_y(rep.a, rep.b);
  rep.g = resultant_in_y(rep.a.swapped(), rep.b.swapped());
  rep.deg_f = rep.f.degree();
  rep.deg_g = rep.g.degree();
  rep.deg_b = rep.b.degree();
  rep.height_b = poly_height(rep.b);
  rep.height_f = ratpoly_height(rep.f);
  rep.height_g = ratpoly_height(rep.g);
  rep.step2_degrees_hold = rep.c4 >= rep.deg_f && rep.c4 >= rep.deg_g;
  rep.step2_heights_hold =
      rep.c3_bound >= rep.height_b && rep.c3_bound >= rep.height_f && rep.c3_bound >= rep.height_g;

  const RootSet rf = rational_roots(rep.f), rg = rational_roots(rep.g);
  if (!rf.complete || !rg.complete)
    throw Error(ErrorCode::NotSplit, "resultants do not split over Q(t)");
  rep.roots_f = rf.roots;
  rep.roots_g = rg.roots;
  std::vector<RatFunc> alphas = rf.roots, betas = rg.roots;
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());

  // V: S, poles of B, zeros of the extreme coefficients of F and G, the
  // roots themselves, and the nonzero values A and B take on root pairs
  std::vector<RatFunc> grow = coefficients(rep.b);
  for (const RatPoly* p : {&rep.f, &rep.g}) {
    grow.push_back(p->coeffs().front());
    grow.push_back(p->leading());
  }
  for (const auto& x : alphas) grow.push_back(x);
  for (const auto& y : betas) grow.push_back(y);
  for (const auto& x : alphas)
    for (const auto& y : betas) {
      const RatFunc av = evaluate(rep.a, x, y), bv = evaluate(rep.b, x, y);
      if (!av.is_zero()) grow.push_back(av);
      if (!bv.is_zero()) grow.push_back(bv);
      if (av.is_zero() && bv.is_zero() && !x.is_zero() && !y.is_zero()) rep.z_set.emplace_back(x, y);
    }
  grow.erase(std::remove_if(grow.begin(), grow.end(), [](const RatFunc& f) { return f.is_zero(); }), grow.end());
  rep.v_set = enlarge_for_coefficients(s, grow);

  const RatFunc bval = evaluate(rep.b, rep.u, rep.v);
  for (const auto& [place, ord] : divisor_of(value)) {
    if (ord <= 0 || rep.v_set.contains(place)) continue;
    AuditRow row{place, ord, capped_ord(bval, place), 0, false};
    for (const auto& [x, y] : rep.z_set) {
      const long term = std::min(capped_ord(rep.u - x, place), capped_ord(rep.v - y, place));
      row.rhs = std::min(kInfiniteOrder, row.rhs + term);
    }
    const long middle = std::min(row.ord_a, row.ord_b);
    row.holds = std::max(0L, row.ord_a - 1) <= middle && middle <= row.rhs;
    rep.rows.push_back(row);
  }
  for (const auto& [x, y] : rep.z_set) {
    if ((rep.u / x).is_constant() || (rep.v / y).is_constant()) continue;
    rep.gcd_checks.push_back(check_cz_gcd_bound(rep.u, x, rep.v, y, rep.v_set));
  }
  return rep;
}

}  // namespace ffvojta
