#include "ffvojta/counting.hpp"

#include <algorithm>

#include "ffvojta/error.hpp"
#include "ffvojta/factor.hpp"

namespace ffvojta {

namespace {

constexpr size_t kMaxTerms = 20;

// Removes every finite place of S from p.
Poly strip_places(Poly p, const PlaceSet& s) {
  for (const auto& place : s.places())
    if (!place.is_infinity()) strip_factor(p, place.poly());
  return p;
}

void require_s_integer(const RatFunc& f, const PlaceSet& s) {
  Poly den = strip_places(f.den(), s);
  if (den.degree() > 0) {
    const auto first = factor(den).factors.front().first;
    throw Error(ErrorCode::NotSInteger,
                f.to_string() + " has a pole at " + Place::from_irreducible(first).to_string() + " outside S");
  }
  if (!s.has_infinity() && ord_at(f, Place::infinity()) < 0)
    throw Error(ErrorCode::NotSInteger, f.to_string() + " has a pole at inf outside S");
}

std::string subset_text(const std::vector<size_t>& idx) {
  std::string out = "{";
  for (size_t k = 0; k < idx.size(); ++k) out += (k ? "," : "") + std::to_string(idx[k]);
  return out + "}";
}

}  // namespace

CountReport trunc_count(const RatFunc& f, const PlaceSet& s) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "truncated count of 0");
  CountReport report;
  Poly num = strip_places(f.num(), s);
  if (num.degree() > 0) {
    for (const auto& [piece, m] : yun_squarefree(num)) {
      if (m < 2) continue;
      for (const auto& [q, e] : factor(piece).factors) {
        report.per_place[Place::from_irreducible(q)] = m - 1;
        report.total += static_cast<long>(q.degree()) * (m - 1);
      }
    }
  }
  if (!s.has_infinity()) {
    const long ord = ord_at(f, Place::infinity());
    if (ord > 1) {
      report.per_place[Place::infinity()] = ord - 1;
      report.total += ord - 1;
    }
  }
  return report;
}

long zeros_outside(const RatFunc& f, const PlaceSet& s) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "zero count of 0");
  long n = strip_places(f.num(), s).degree();
  if (!s.has_infinity()) n += std::max(0L, ord_at(f, Place::infinity()));
  return n;
}

long min_ord_sum(const RatFunc& f, const RatFunc& g, const PlaceSet& s) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroFunction, "min_ord_sum of 0");
  require_s_integer(f, s);
  require_s_integer(g, s);
  long total = gcd(strip_places(f.num(), s), strip_places(g.num(), s)).degree();
  if (!s.has_infinity()) total += std::min(ord_at(f, Place::infinity()), ord_at(g, Place::infinity()));
  return total;
}

long gcd_units_sum(const RatFunc& u, const RatFunc& alpha, const RatFunc& v, const RatFunc& beta,
                   const PlaceSet& v_set) {
  RatFunc du = u - alpha, dv = v - beta;
  if (du.is_zero() || dv.is_zero()) throw Error(ErrorCode::ZeroDifference, "u = alpha or v = beta");
  return min_ord_sum(du, dv, v_set);
}

BoundCheck check_cz_gcd_bound(const RatFunc& u, const RatFunc& alpha, const RatFunc& v, const RatFunc& beta,
                              const PlaceSet& v_set) {
  const RatFunc x = u / alpha, y = v / beta;
  if (x.is_constant() || y.is_constant()) throw Error(ErrorCode::ConstantQuotient, "u/alpha or v/beta is constant");
  return check_cz_gcd_bound(u, alpha, v, beta, v_set,
                            mult_dependence(sunit_from_ratfunc(x, v_set), sunit_from_ratfunc(y, v_set)));
}

BoundCheck check_cz_gcd_bound(const RatFunc& u, const RatFunc& alpha, const RatFunc& v, const RatFunc& beta,
                              const PlaceSet& v_set, const DependenceResult& dependence) {
  const RatFunc x = u / alpha, y = v / beta;
  if (x.is_constant() || y.is_constant()) throw Error(ErrorCode::ConstantQuotient, "u/alpha or v/beta is constant");
  for (const RatFunc* f : {&u, &alpha, &v, &beta}) sunit_from_ratfunc(*f, v_set);
  const long lhs = gcd_units_sum(u, alpha, v, beta, v_set);
  const long h = std::max(height(x), height(y));
  BoundCheck out;
  if (!dependence.dependent) {
    out.cubed = true;
    out.lhs = Rational(lhs) * lhs * lhs;
    out.rhs = Rational(54) * h * h * euler_char(v_set);
    out.detail = "independent: lhs^3 <= 54 H^2 chi_V";
  } else {
    const long m = std::max(std::abs(dependence.r), std::abs(dependence.s));
    out.lhs = lhs;
    out.rhs = Rational(h, m);
    out.rhs.canonicalize();
    out.detail = "dependent (" + std::to_string(dependence.r) + ", " + std::to_string(dependence.s) +
                 "): lhs <= H / max(|r|, |s|)";
  }
  out.holds = out.lhs <= out.rhs;
  return out;
}

std::optional<std::vector<size_t>> find_vanishing_subsum(std::span<const RatFunc> terms, bool include_full) {
  const size_t m = terms.size();
  if (m > kMaxTerms) throw Error(ErrorCode::InvalidInput, "at most 20 terms supported");
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  // smaller subsets first so the reported subset is minimal
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    if (include_full || mask != full) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (auto mask : masks) {
    RatFunc sum;
    for (size_t k = 0; k < m; ++k)
      if (mask & (std::uint32_t{1} << k)) sum += terms[k];
    if (sum.is_zero()) {
      std::vector<size_t> idx;
      for (size_t k = 0; k < m; ++k)
        if (mask & (std::uint32_t{1} << k)) idx.push_back(k);
      return idx;
    }
  }
  return std::nullopt;
}

BoundCheck check_zannier_bound(std::span<const RatFunc> monomials, const PlaceSet& v_set) {
  if (monomials.empty()) throw Error(ErrorCode::InvalidInput, "empty list of monomials");
  for (const auto& th : monomials) sunit_from_ratfunc(th, v_set);
  if (auto idx = find_vanishing_subsum(monomials, true))
    throw Error(ErrorCode::VanishingSubsum, "terms " + subset_text(*idx) + " sum to zero");
  RatFunc sum;
  for (const auto& th : monomials) sum += th;
  const long m = static_cast<long>(monomials.size());
  BoundCheck out;
  out.lhs = zeros_outside(sum, v_set);
  out.rhs = Rational(proj_height(monomials)) - Rational(m * (m - 1) / 2) * euler_char(v_set);
  out.holds = out.lhs >= out.rhs;
  out.detail = "lhs >= H(theta) - C(M,2) chi_V";
  return out;
}

}  // namespace ffvojta
