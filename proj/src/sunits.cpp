#include "ffvojta/sunits.hpp"

#include <array>
#include <numeric>
#include <random>

#include "ffvojta/error.hpp"

namespace ffvojta {

long euler_char(const PlaceSet& s) { return s.geometric_size() - 2; }

long SUnit::infinity_order() const {
  long sum = 0;
  for (const auto& [p, e] : exponents) sum += e * p.degree();
  return -sum;
}

void validate(const SUnit& u, const PlaceSet& s) {
  if (u.constant == 0) throw Error(ErrorCode::InvalidUnit, "zero constant");
  for (const auto& [p, e] : u.exponents) {
    if (p.is_infinity()) throw Error(ErrorCode::InvalidUnit, "infinity cannot carry an explicit exponent");
    if (e == 0) throw Error(ErrorCode::InvalidUnit, "stored zero exponent at " + p.to_string());
    if (!s.contains(p)) throw Error(ErrorCode::InvalidUnit, "place " + p.to_string() + " is not in S");
  }
  if (!s.has_infinity() && u.infinity_order() != 0)
    throw Error(ErrorCode::InvalidUnit,
                "order " + std::to_string(u.infinity_order()) + " at infinity but infinity is not in S");
}

SUnit make_sunit(const PlaceSet& s, Rational constant, std::map<Place, long> exponents) {
  std::erase_if(exponents, [](const auto& kv) { return kv.second == 0; });
  SUnit u{std::move(constant), std::move(exponents)};
  validate(u, s);
  return u;
}

SUnit sunit_from_ratfunc(const RatFunc& f, const PlaceSet& s) {
  if (f.is_zero()) throw Error(ErrorCode::NotUnit, "0 is not a unit");
  SUnit u;
  u.constant = f.num().leading();
  for (const auto& [p, e] : divisor_of(f)) {
    if (!s.contains(p))
      throw Error(ErrorCode::NotUnit, f.to_string() + " has a zero or pole at " + p.to_string() + " outside S");
    if (!p.is_infinity()) u.exponents[p] = e;
  }
  return u;
}

RatFunc as_ratfunc(const SUnit& u) {
  Poly num(u.constant), den(1);
  for (const auto& [p, e] : u.exponents) {
    if (e > 0) num *= p.poly().pow(static_cast<unsigned>(e));
    else den *= p.poly().pow(static_cast<unsigned>(-e));
  }
  return RatFunc(std::move(num), std::move(den));
}

SUnit operator*(const SUnit& a, const SUnit& b) {
  SUnit r = a;
  r.constant *= b.constant;
  for (const auto& [p, e] : b.exponents) r.exponents[p] += e;
  std::erase_if(r.exponents, [](const auto& kv) { return kv.second == 0; });
  return r;
}

SUnit pow(const SUnit& u, long e) {
  SUnit r;
  r.constant = ffvojta::pow(u.constant, e);
  if (e == 0) return r;
  for (const auto& [p, x] : u.exponents) r.exponents[p] = x * e;
  return r;
}

RatFunc theta(const SUnit& u, const OmegaForm& w) {
  // sum of e * p'/p, times the denominator of omega
  RatFunc acc;
  for (const auto& [p, e] : u.exponents) acc += RatFunc(p.poly().derivative() * Poly(e), p.poly());
  return acc * RatFunc(w.denominator);
}

DependenceResult mult_dependence(const SUnit& u, const SUnit& v) {
  std::map<Place, std::array<long, 2>> vec;
  for (const auto& [p, e] : u.exponents) vec[p][0] = e;
  for (const auto& [p, e] : v.exponents) vec[p][1] = e;

  DependenceResult out;
  long r = 0, s = 0;
  // A nonzero coordinate of u fixes the only candidate kernel direction.
  auto pivot = std::find_if(vec.begin(), vec.end(), [](const auto& kv) { return kv.second[0] != 0; });
  if (pivot == vec.end()) {
    r = 1;
  } else {
    r = pivot->second[1];
    s = -pivot->second[0];
    const long g = std::gcd(r, s);
    r /= g;
    s /= g;
    for (const auto& [p, ev] : vec)
      if (r * ev[0] + s * ev[1] != 0) return out;
  }
  if (r < 0 || (r == 0 && s < 0)) {
    r = -r;
    s = -s;
  }
  out.dependent = true;
  out.r = r;
  out.s = s;
  out.gamma = as_ratfunc(pow(u, r) * pow(v, s));
  return out;
}

namespace {
const std::array<Rational, 8> kConstantPool = {Rational(1),    Rational(-1), Rational(2),     Rational(-2),
                                               Rational(1, 2), Rational(3),  Rational(-1, 3), Rational(3, 2)};

long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}
}  // namespace

SUnit generate_one(const PlaceSet& s, long max_exponent, std::uint64_t seed, std::uint64_t index) {
  if (max_exponent < 1) throw Error(ErrorCode::InvalidInput, "max_exponent must be at least 1");
  std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(sq);
  SUnit u;
  u.constant = kConstantPool[rng() % kConstantPool.size()];
  const auto finite = s.finite_places();
  std::vector<long> e(finite.size());
  for (auto& x : e) x = draw(rng, -max_exponent, max_exponent);

  if (!s.has_infinity() && !finite.empty()) {
    // push exponents toward zero total degree without leaving the box
    auto imbalance = [&] {
      long b = 0;
      for (size_t k = 0; k < finite.size(); ++k) b += e[k] * finite[k].degree();
      return b;
    };
    const size_t start = rng() % finite.size();
    for (size_t step = 0; step < finite.size() && imbalance() != 0; ++step) {
      const size_t k = (start + step) % finite.size();
      const long b = imbalance();
      const long d = finite[k].degree();
      long moves = std::abs(b) / d;
      const long room = b > 0 ? e[k] + max_exponent : max_exponent - e[k];
      moves = std::min(moves, room);
      e[k] += b > 0 ? -moves : moves;
    }
    if (imbalance() != 0) std::fill(e.begin(), e.end(), 0);
  }
  for (size_t k = 0; k < finite.size(); ++k)
    if (e[k] != 0) u.exponents[finite[k]] = e[k];
  return u;
}

std::vector<SUnit> generate(const PlaceSet& s, long max_exponent, long count, std::uint64_t seed) {
  std::vector<SUnit> out;
  for (long k = 0; k < count; ++k) out.push_back(generate_one(s, max_exponent, seed, static_cast<std::uint64_t>(k)));
  return out;
}

PlaceSet support(const RatFunc& f) {
  std::vector<Place> ps;
  for (const auto& [p, e] : divisor_of(f)) ps.push_back(p);
  return PlaceSet(std::move(ps));
}

PlaceSet enlarge_for_coefficients(const PlaceSet& s, std::span<const RatFunc> fs) {
  PlaceSet out = s;
  for (const auto& f : fs) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "coefficient is zero");
    out = out.united(support(f));
  }
  return out;
}

}  // namespace ffvojta
