#include "ffvojta/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "ffvojta/error.hpp"

namespace ffvojta {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

Poly Poly::monomial(const Rational& c, int degree) {
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of 0");
  return coeffs_.back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (degree() < d.degree()) return {Poly(), *this};
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quo(coeffs_.size() - d.coeffs_.size() + 1);
  const Rational inv = 1 / d.leading();
  const size_t dn = d.coeffs_.size();
  for (size_t k = quo.size(); k-- > 0;) {
    Rational c = rem[k + dn - 1] * inv;
    quo[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < dn; ++j) rem[k + j] -= c * d.coeffs_[j];
  }
  rem.resize(dn - 1);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

bool Poly::divides(const Poly& f) const { return (f % *this).is_zero(); }

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero())
    throw Error(ErrorCode::PreconditionViolated, d.to_string() + " does not divide " + to_string());
  return q;
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int k = a.degree(); k >= 0; --k) {
    const auto& x = a.coeffs_[static_cast<size_t>(k)];
    const auto& y = b.coeffs_[static_cast<size_t>(k)];
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 't';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

namespace {

constexpr std::uint64_t kGcdPrime = 2147483647;

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  for (a %= p; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

// Image mod p, or empty when a denominator or the leading coefficient dies.
std::vector<std::uint64_t> image_mod(const Poly& f, std::uint64_t p) {
  std::vector<std::uint64_t> v;
  for (const auto& c : f.coeffs()) {
    const std::uint64_t d = mpz_fdiv_ui(c.get_den_mpz_t(), p);
    if (d == 0) return {};
    v.push_back(mpz_fdiv_ui(c.get_num_mpz_t(), p) * inv_mod(d, p) % p);
  }
  if (v.empty() || v.back() == 0) return {};
  return v;
}

// True only when a and b are certainly coprime over Q: the gcd degree mod a
// prime not dividing either leading coefficient bounds the one over Q.
bool coprime_mod_p(const Poly& a, const Poly& b) {
  const std::uint64_t p = kGcdPrime;
  auto x = image_mod(a, p), y = image_mod(b, p);
  if (x.empty() || y.empty()) return false;
  while (!y.empty()) {
    const std::uint64_t inv = inv_mod(y.back(), p);
    while (x.size() >= y.size()) {
      const std::uint64_t q = x.back() * inv % p;
      const size_t shift = x.size() - y.size();
      for (size_t k = 0; k < y.size(); ++k) x[k + shift] = (x[k + shift] + (p - q) * y[k]) % p;
      while (!x.empty() && x.back() == 0) x.pop_back();
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return x.size() == 1;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0 || coprime_mod_p(a, b)) return Poly(1);
  // primitive remainder sequence keeps the coefficients small
  Poly x = primitive_part(a), y = primitive_part(b);
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = primitive_part(r);
  }
  return x.monic();
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale = Rational(den_lcm) / Rational(content);
  if (p.leading() < 0) scale = -scale;
  return p * scale;
}

int strip_factor(Poly& f, const Poly& d) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "strip_factor on 0");
  if (d.degree() < 1) throw Error(ErrorCode::InvalidInput, "strip_factor needs a nonconstant factor");
  int m = 0;
  for (;;) {
    auto [q, r] = f.divmod(d);
    if (!r.is_zero()) return m;
    f = std::move(q);
    ++m;
  }
}

std::vector<std::pair<Poly, int>> yun_squarefree(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of 0");
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  const Poly f = p.monic();
  const Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = f / a;
  Poly c = df / a;
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

std::vector<Poly> coprime_base(std::span<const Poly> polys) {
  std::vector<Poly> base;
  auto push = [&base](const Poly& q) {
    if (q.degree() < 1) return;
    Poly m = q.monic();
    if (std::find(base.begin(), base.end(), m) == base.end()) base.push_back(std::move(m));
  };
  for (const auto& p : polys) {
    if (!p.is_zero()) push(p);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < base.size() && !changed; ++i) {
      Poly g = gcd(base[i], base[i].derivative());
      if (g.degree() > 0) {
        Poly x = base[i];
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        push(g);
        push(x / g);
        changed = true;
        break;
      }
      for (size_t j = i + 1; j < base.size(); ++j) {
        Poly h = gcd(base[i], base[j]);
        if (h.degree() < 1) continue;
        Poly x = base[i], y = base[j];
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        push(h);
        push(x / h);
        push(y / h);
        changed = true;
        break;
      }
    }
  }
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace ffvojta
