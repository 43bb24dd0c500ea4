#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffvojta/p2family.hpp"

namespace ffvojta {

enum class Mode { Verify, Audit, Constants, Bm, Quartic };
std::string to_string(Mode mode);
/// Accepts the names above in lower case plus "check-bm" and "quartic-example".
Mode mode_from_string(const std::string& text);

struct FactorSpec {
  std::string expr;
  long deg_x = 0, deg_y = 0, h = 0;
  bool attested = false;  // specialization audit found it consistent with irreducibility
  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

struct RunConfig {
  std::string poly = "X+Y+1";
  std::vector<std::string> factors;  // empty: the polynomial is its own single factor
  std::string places = "0,1,inf";
  Rational epsilon{1, 2};
  long count = 100;
  long max_exponent = 10;
  std::uint64_t seed = 0;
  Mode mode = Mode::Verify;
  unsigned workers = 1;  // never affects results

  /// Ignores `workers`.
  friend bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.poly == b.poly && a.factors == b.factors && a.places == b.places && a.epsilon == b.epsilon &&
           a.count == b.count && a.max_exponent == b.max_exponent && a.seed == b.seed && a.mode == b.mode;
  }
};

/// Parsed and checked view of a config.
struct ResolvedConfig {
  BiPoly poly;
  std::vector<BiPoly> factor_polys;
  std::vector<FactorSpec> factors;
  PlaceSet places;      // as given
  PlaceSet effective;   // grown so every coefficient of every factor is a unit
};

/// Throws InvalidInput (epsilon, count, factor product), ParseError.
ResolvedConfig resolve(const RunConfig& cfg);

struct VerifyRun {
  RunConfig config;
  std::vector<FactorSpec> factors;
  std::string effective_places;
  ThetaLedger ledger;
  std::vector<PairOutcome> outcomes;  // ordered by pair_index
  friend bool operator==(const VerifyRun&, const VerifyRun&) = default;
};

/// Pair k uses units 2k and 2k+1 drawn from (seed, effective places).
VerifyRun verify_th12(const RunConfig& cfg);

/// Pointwise comparison at one zero of A(u, v) outside V.
struct AuditRow {
  Place place;
  long ord_a = 0, ord_b = 0;
  long rhs = 0;  // sum over Z of min(ord(u - alpha), ord(v - beta)); kInfiniteOrder if some difference is 0
  bool holds = false;
};

struct AuditReport {
  BiPoly a, b;
  RatFunc u, v;
  bool coprime = true;
  std::optional<RatFunc> step1_ratio;  // a with B = a A
  long r = 0, s = 0;
  RatFunc gamma;
  RatPoly f, g;
  long deg_f = 0, deg_g = 0, deg_b = 0;
  long height_b = 0, height_f = 0, height_g = 0;
  Rational c3_bound;  // c3 max{1, chi_S}
  Rational c4;
  bool step2_degrees_hold = false;
  bool step2_heights_hold = false;
  std::vector<RatFunc> roots_f, roots_g;
  std::vector<std::pair<RatFunc, RatFunc>> z_set;
  PlaceSet v_set;
  std::vector<AuditRow> rows;
  std::vector<BoundCheck> gcd_checks;  // one per element of Z with nonconstant quotients
};

inline constexpr long kInfiniteOrder = 1L << 40;

/// Split-case audit of the irreducible argument for one pair. Throws
/// NotIrreducibleAttested, NotSplit, SectionInsideZ.
AuditReport audit_steps(const RunConfig& cfg, const SUnit& u, const SUnit& v);

}  // namespace ffvojta
