#include "ffvojta/unitsum.hpp"

#include "ffvojta/error.hpp"

namespace ffvojta {

long gamma(long l) {
  if (l <= 0) return 0;
  return (l - 1) * (l - 2) / 2;
}

long m_at(const std::vector<RatFunc>& ws, const Place& p) {
  long m = 0;
  for (const auto& w : ws) {
    if (w.is_zero()) throw Error(ErrorCode::ZeroFunction, "term is 0");
    if (ord_at(w, p) == 0) ++m;
  }
  return m;
}

BmCheck check_bm(const VanishingSum& vs) {
  const auto& w = vs.terms;
  const long n = static_cast<long>(w.size());
  if (n < 3 || n > 20) throw Error(ErrorCode::InvalidInput, "need 3 <= n <= 20 terms");
  for (const auto& term : w) sunit_from_ratfunc(term, vs.place_set);
  RatFunc sum;
  for (const auto& term : w) sum += term;
  if (!sum.is_zero()) throw Error(ErrorCode::SumNonzero, "terms sum to " + sum.to_string());
  if (auto idx = find_vanishing_subsum(w, false)) {
    std::string list;
    for (size_t k : *idx) list += (list.empty() ? "" : ",") + std::to_string(k);
    throw Error(ErrorCode::VanishingSubsum, "proper subsum {" + list + "} vanishes");
  }
  BmCheck out;
  long rhs = 0;  // the genus term vanishes on the line
  for (const auto& p : vs.place_set.places()) {
    const long m = m_at(w, p);
    const long deficit = gamma(n) - gamma(m);
    if (deficit == 0) continue;
    out.deficits.push_back({p, m, deficit});
    rhs += (p.is_infinity() ? 1 : p.degree()) * deficit;
  }
  out.bound.lhs = proj_height(w);
  out.bound.rhs = rhs;
  out.bound.holds = out.bound.lhs <= out.bound.rhs;
  out.bound.detail = "H(w) <= sum_P (gamma_n - gamma_m_P)";
  return out;
}

std::optional<VanishingSum> make_vanishing_sum(const PlaceSet& s, long n, long max_exponent, std::uint64_t seed,
                                               std::uint64_t index) {
  if (n < 3 || n > 20) throw Error(ErrorCode::InvalidInput, "need 3 <= n <= 20 terms");
  VanishingSum vs;
  RatFunc sum;
  for (long k = 0; k < n - 1; ++k) {
    vs.terms.push_back(as_ratfunc(generate_one(s, max_exponent, seed, index * 32 + static_cast<std::uint64_t>(k))));
    sum += vs.terms.back();
  }
  if (sum.is_zero()) return std::nullopt;
  vs.terms.push_back(-sum);
  const RatFunc last = vs.terms.back();
  try {
    vs.place_set = enlarge_for_coefficients(s, std::span<const RatFunc>(&last, 1));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidPlace) throw;
    return std::nullopt;  // a factor of the last term exceeds the place degree cap
  }
  if (find_vanishing_subsum(vs.terms, false)) return std::nullopt;
  return vs;
}

}  // namespace ffvojta
