#include "ffvojta/factor.hpp"

#include <algorithm>

#include "ffvojta/error.hpp"

namespace ffvojta {
namespace {

// Dense polynomials over Z/p, lowest degree first, coefficients in [0, p).
class ModRing {
 public:
  using Vec = std::vector<Integer>;

  explicit ModRing(Integer p) : p_(std::move(p)) {}

  const Integer& prime() const { return p_; }

  Vec reduce(const Poly& f) const {
    Vec v;
    for (const auto& c : f.coeffs()) {
      Integer n = c.get_num() % p_;
      Integer d = c.get_den() % p_;
      Integer inv;
      mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p_.get_mpz_t());
      Integer r = (n * inv) % p_;
      if (r < 0) r += p_;
      v.push_back(r);
    }
    return trim(std::move(v));
  }

  static Vec trim(Vec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  }
  static int deg(const Vec& v) { return static_cast<int>(v.size()) - 1; }

  Vec sub(const Vec& a, const Vec& b) const {
    Vec r(std::max(a.size(), b.size()));
    for (size_t k = 0; k < r.size(); ++k) {
      Integer x = (k < a.size() ? a[k] : Integer(0)) - (k < b.size() ? b[k] : Integer(0));
      x %= p_;
      if (x < 0) x += p_;
      r[k] = x;
    }
    return trim(std::move(r));
  }

  Vec mul(const Vec& a, const Vec& b) const {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& x : r) x %= p_;
    return trim(std::move(r));
  }

  std::pair<Vec, Vec> divmod(const Vec& a, const Vec& d) const {
    if (deg(a) < deg(d)) return {{}, a};
    Integer inv;
    mpz_invert(inv.get_mpz_t(), d.back().get_mpz_t(), p_.get_mpz_t());
    Vec rem = a;
    Vec quo(a.size() - d.size() + 1);
    for (size_t k = quo.size(); k-- > 0;) {
      Integer c = (rem[k + d.size() - 1] * inv) % p_;
      quo[k] = c;
      if (c == 0) continue;
      for (size_t j = 0; j < d.size(); ++j) {
        rem[k + j] = (rem[k + j] - c * d[j]) % p_;
        if (rem[k + j] < 0) rem[k + j] += p_;
      }
    }
    rem.resize(d.size() - 1);
    return {trim(std::move(quo)), trim(std::move(rem))};
  }

  Vec mod(const Vec& a, const Vec& d) const { return divmod(a, d).second; }

  Vec monic(const Vec& a) const {
    if (a.empty()) return a;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p_.get_mpz_t());
    Vec r = a;
    for (auto& x : r) x = (x * inv) % p_;
    return r;
  }

  Vec gcd(Vec a, Vec b) const {
    while (!b.empty()) {
      Vec r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  Vec derivative(const Vec& a) const {
    if (a.size() <= 1) return {};
    Vec r(a.size() - 1);
    for (size_t k = 1; k < a.size(); ++k) r[k - 1] = (a[k] * static_cast<unsigned long>(k)) % p_;
    return trim(std::move(r));
  }

  Vec powmod(const Vec& base, const Integer& e, const Vec& m) const {
    Vec result{Integer(1)};
    result = mod(result, m);
    Vec b = mod(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      result = mod(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, b), m);
    }
    return result;
  }

 private:
  Integer p_;
};

using Vec = ModRing::Vec;

// Distinct-degree then equal-degree (Cantor-Zassenhaus) splitting of a monic
// square-free polynomial mod p.
std::vector<Vec> factor_mod(const ModRing& R, Vec f, gmp_randclass& rng) {
  std::vector<std::pair<Vec, int>> ddf;
  const Vec x{Integer(0), Integer(1)};
  Vec h = x;
  for (int i = 1; ModRing::deg(f) >= 2 * i; ++i) {
    h = R.powmod(h, R.prime(), f);
    Vec g = R.gcd(f, R.sub(h, x));
    if (ModRing::deg(g) > 0) {
      ddf.emplace_back(g, i);
      f = R.divmod(f, g).first;
      h = R.mod(h, f);
    }
  }
  if (ModRing::deg(f) > 0) ddf.emplace_back(f, ModRing::deg(f));

  std::vector<Vec> out;
  for (auto& [g, d] : ddf) {
    std::vector<Vec> stack{g};
    while (!stack.empty()) {
      Vec cur = std::move(stack.back());
      stack.pop_back();
      if (ModRing::deg(cur) == d) {
        out.push_back(std::move(cur));
        continue;
      }
      Integer pd;
      mpz_pow_ui(pd.get_mpz_t(), R.prime().get_mpz_t(), static_cast<unsigned long>(d));
      const Integer e = (pd - 1) / 2;
      for (;;) {
        Vec a(static_cast<size_t>(ModRing::deg(cur)));
        for (auto& c : a) c = rng.get_z_range(R.prime());
        a = ModRing::trim(std::move(a));
        if (ModRing::deg(a) < 1) continue;
        Vec b = R.sub(R.powmod(a, e, cur), Vec{Integer(1)});
        Vec s = R.gcd(cur, b);
        if (ModRing::deg(s) > 0 && ModRing::deg(s) < ModRing::deg(cur)) {
          stack.push_back(R.divmod(cur, s).first);
          stack.push_back(std::move(s));
          break;
        }
      }
    }
  }
  return out;
}

Integer isqrt_ceil(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

Poly symmetric_lift(const Vec& v, const Integer& p) {
  const Integer half = p / 2;
  std::vector<Rational> c;
  for (const auto& x : v) c.emplace_back(x > half ? Integer(x - p) : x);
  return Poly(std::move(c));
}

// Irreducible factors of a primitive, square-free integer polynomial.
std::vector<Poly> factor_squarefree_integer(Poly g) {
  if (g.degree() <= 1) return {g};
  const int n = g.degree();
  Integer norm2 = 0;
  for (const auto& c : g.coeffs()) norm2 += c.get_num() * c.get_num();
  Integer lc = abs(g.leading().get_num());
  Integer bound = lc * (Integer(1) << n) * isqrt_ceil(norm2) + 1;
  Integer p;
  Integer start = 2 * bound + 1;
  mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
  for (;;) {
    ModRing R(p);
    Vec gm = R.reduce(g);
    if (ModRing::deg(gm) == n && ModRing::deg(R.gcd(gm, R.derivative(gm))) == 0) break;
    Integer q = p;
    mpz_nextprime(p.get_mpz_t(), q.get_mpz_t());
  }
  ModRing R(p);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  std::vector<Vec> modular = factor_mod(R, R.monic(R.reduce(g)), rng);

  std::vector<Poly> found;
  size_t s = 1;
  while (2 * s <= modular.size()) {
    bool hit = false;
    std::vector<size_t> idx(s);
    for (size_t k = 0; k < s; ++k) idx[k] = k;
    for (;;) {
      const Integer lead = g.leading().get_num();
      Vec prod{((lead % p) + p) % p};
      for (size_t k : idx) prod = R.mul(prod, modular[k]);
      Poly h = primitive_part(symmetric_lift(prod, p));
      if (h.degree() > 0) {
        auto [q, r] = g.divmod(h);
        if (r.is_zero()) {
          found.push_back(h);
          g = primitive_part(q);
          for (size_t k = s; k-- > 0;) modular.erase(modular.begin() + static_cast<std::ptrdiff_t>(idx[k]));
          hit = true;
          break;
        }
      }
      // next combination in lexicographic order
      size_t k = s;
      while (k > 0 && idx[k - 1] == modular.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (g.degree() > 0) found.push_back(g);
  return found;
}

}  // namespace

Factorization factor(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of 0");
  Factorization out{p.leading(), {}};
  if (p.degree() < 1) return out;
  Poly sqfree = primitive_part(p / gcd(p, p.derivative()));
  Poly rest = p.monic();
  for (const auto& f : factor_squarefree_integer(sqfree)) {
    Poly m = f.monic();
    int e = strip_factor(rest, m);
    out.factors.emplace_back(std::move(m), e);
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  auto f = factor(p);
  return f.factors.size() == 1 && f.factors.front().second == 1;
}

std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> roots;
  for (const auto& [f, e] : factor(p).factors)
    if (f.degree() == 1) roots.push_back(-f.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ffvojta
