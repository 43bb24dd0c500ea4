#include "ffvojta/bipoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ffvojta/error.hpp"
#include "ffvojta/factor.hpp"

namespace ffvojta {

// ---- RatPoly ----

RatPoly::RatPoly(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const RatFunc& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const RatFunc& RatPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of 0");
  return coeffs_.back();
}

RatFunc RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<size_t>(k)];
}

RatFunc RatPoly::eval(const RatFunc& x) const {
  RatFunc acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  std::vector<RatFunc> d;
  for (size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * RatFunc(static_cast<long>(k)));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatFunc inv = leading().inverse();
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) { return *this += -o; }

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) return *this = RatPoly();
  std::vector<RatFunc> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return *this = RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (degree() < d.degree()) return {RatPoly(), *this};
  std::vector<RatFunc> rem = coeffs_;
  std::vector<RatFunc> quo(coeffs_.size() - d.coeffs_.size() + 1);
  const RatFunc inv = d.leading().inverse();
  const size_t dn = d.coeffs_.size();
  for (size_t k = quo.size(); k-- > 0;) {
    RatFunc c = rem[k + dn - 1] * inv;
    quo[k] = c;
    if (c.is_zero()) continue;
    for (size_t j = 0; j < dn; ++j) rem[k + j] -= c * d.coeffs_[j];
  }
  rem.resize(dn - 1);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::exact_div(const RatPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw Error(ErrorCode::PreconditionViolated, "inexact division over Q(t)");
  return q;
}

std::string RatPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const RatFunc& c = coeffs_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = "(" + c.to_string() + ")";
    } else {
      if (c != RatFunc(1)) term = "(" + c.to_string() + ")*";
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---- BiPoly ----

BiPoly::BiPoly(const RatFunc& c) { set({0, 0}, c); }

BiPoly BiPoly::monomial(const RatFunc& c, int i, int j) {
  BiPoly r;
  r.set({i, j}, c);
  return r;
}

void BiPoly::set(const Key& k, RatFunc c) {
  if (c.is_zero()) terms_.erase(k);
  else terms_[k] = std::move(c);
}

RatFunc BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? RatFunc() : it->second;
}

bool BiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0}); }

int BiPoly::deg_x() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

BiPoly BiPoly::partial_x() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) r.set({k.first - 1, k.second}, c * RatFunc(static_cast<long>(k.first)));
  return r;
}

BiPoly BiPoly::partial_y() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) r.set({k.first, k.second - 1}, c * RatFunc(static_cast<long>(k.second)));
  return r;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.set({k.second, k.first}, c);
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result(RatFunc(1));
  for (unsigned k = 0; k < e; ++k) result *= *this;
  return result;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) set(k, coeff(k.first, k.second) + c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  std::map<Key, RatFunc> acc;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) acc[{k1.first + k2.first, k1.second + k2.second}] += c1 * c2;
  terms_.clear();
  for (auto& [k, c] : acc) set(k, std::move(c));
  return *this;
}

std::vector<RatPoly> BiPoly::y_coefficients() const {
  std::vector<std::vector<RatFunc>> raw(static_cast<size_t>(deg_y()) + 1);
  for (const auto& [k, c] : terms_) {
    auto& v = raw[static_cast<size_t>(k.second)];
    if (v.size() <= static_cast<size_t>(k.first)) v.resize(static_cast<size_t>(k.first) + 1);
    v[static_cast<size_t>(k.first)] = c;
  }
  std::vector<RatPoly> out;
  for (auto& v : raw) out.emplace_back(std::move(v));
  if (is_zero()) out.clear();
  return out;
}

namespace {
BiPoly from_y_coefficients(const std::vector<RatPoly>& cs) {
  BiPoly r;
  for (size_t j = 0; j < cs.size(); ++j)
    for (int i = 0; i <= cs[j].degree(); ++i)
      r += BiPoly::monomial(cs[j].coeff(i), i, static_cast<int>(j));
  return r;
}
}  // namespace

RatPoly BiPoly::at_x(const RatFunc& x0) const {
  std::vector<RatFunc> c(static_cast<size_t>(deg_y()) + 1);
  for (const auto& [k, v] : terms_) c[static_cast<size_t>(k.second)] += v * x0.pow(k.first);
  return RatPoly(std::move(c));
}

std::map<BiPoly::Key, Rational> BiPoly::at_t(const Rational& t0) const {
  std::map<Key, Rational> out;
  for (const auto& [k, c] : terms_) {
    Rational d = c.den().eval(t0);
    if (d == 0) throw Error(ErrorCode::PreconditionViolated, "coefficient has a pole at t = " + t0.get_str());
    Rational v = c.num().eval(t0) / d;
    if (v != 0) out[k] = v;
  }
  return out;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    if (k.first > 0) mono += k.first == 1 ? "X" : "X^" + std::to_string(k.first);
    if (k.second > 0) {
      if (!mono.empty()) mono += '*';
      mono += k.second == 1 ? "Y" : "Y^" + std::to_string(k.second);
    }
    std::string term;
    if (mono.empty()) term = "(" + c.to_string() + ")";
    else if (c == RatFunc(1)) term = mono;
    else term = "(" + c.to_string() + ")*" + mono;
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

RatFunc evaluate(const BiPoly& a, const RatFunc& u, const RatFunc& v) {
  std::vector<RatFunc> up{RatFunc(1)}, vp{RatFunc(1)};
  for (int k = 0; k < a.deg_x(); ++k) up.push_back(up.back() * u);
  for (int k = 0; k < a.deg_y(); ++k) vp.push_back(vp.back() * v);
  RatFunc acc;
  for (const auto& [k, c] : a.terms())
    acc += c * up[static_cast<size_t>(k.first)] * vp[static_cast<size_t>(k.second)];
  return acc;
}

long poly_height(const BiPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "height of the zero polynomial");
  long h = 0;
  for (const auto& [k, c] : a.terms()) h = std::max(h, height(c));
  return h;
}

namespace {
BiPoly b_from_thetas(const BiPoly& a, const RatFunc& tu, const RatFunc& tv, const OmegaForm& w) {
  BiPoly b;
  for (const auto& [k, c] : a.terms()) {
    RatFunc coeff = c * (RatFunc(static_cast<long>(k.first)) * tu + RatFunc(static_cast<long>(k.second)) * tv) +
                    deriv_omega(c, w);
    b += BiPoly::monomial(coeff, k.first, k.second);
  }
  return b;
}
}  // namespace

BiPoly b_polynomial(const BiPoly& a, const RatFunc& u, const RatFunc& v, const OmegaForm& w) {
  return b_from_thetas(a, deriv_omega(u, w) / u, deriv_omega(v, w) / v, w);
}

BiPoly b_polynomial(const BiPoly& a, const SUnit& u, const SUnit& v, const OmegaForm& w) {
  return b_from_thetas(a, theta(u, w), theta(v, w), w);
}

BiPoly a_star(const BiPoly& a, long r, long s) {
  if (r == 0 && s == 0) throw Error(ErrorCode::BothZero, "(r, s) = (0, 0)");
  BiPoly out;
  for (const auto& [k, c] : a.terms())
    out += BiPoly::monomial(c * RatFunc(s * k.first - r * k.second), k.first, k.second);
  return out;
}

namespace {
// Fraction-free determinant over Q(t)[X].
RatPoly bareiss_det(std::vector<std::vector<RatPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return RatPoly(RatFunc(1));
  bool negate = false;
  RatPoly prev(RatFunc(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
      m[i][k] = RatPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}
}  // namespace

RatPoly resultant_y(const BiPoly& a, const BiPoly& b) {
  const int m = a.deg_y(), n = b.deg_y();
  if (a.is_zero() || b.is_zero() || m == 0 || n == 0)
    throw Error(ErrorCode::DegenerateDegree, "resultant needs both polynomials to depend on the eliminated variable");
  auto ac = a.y_coefficients(), bc = b.y_coefficients();
  const size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<RatPoly>> syl(size, std::vector<RatPoly>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) syl[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = ac[static_cast<size_t>(m - k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      syl[static_cast<size_t>(n + i)][static_cast<size_t>(i + k)] = bc[static_cast<size_t>(n - k)];
  return bareiss_det(std::move(syl));
}

RatPoly resultant_x(const BiPoly& a, const BiPoly& b) { return resultant_y(a.swapped(), b.swapped()); }

bool has_repeated_factors(const BiPoly& a) {
  if (a.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "repeated-factor test of a constant");
  // Main variable goes in the Y slot.
  BiPoly p = a.deg_x() >= a.deg_y() ? a.swapped() : a;
  auto cs = p.y_coefficients();
  RatPoly content;
  for (const auto& c : cs) content = gcd(content, c);
  if (content.degree() > 0 && gcd(content, content.derivative()).degree() > 0) return true;
  if (p.deg_y() <= 1) return false;
  for (auto& c : cs) c = c.exact_div(content);
  BiPoly pp = from_y_coefficients(cs);
  return resultant_y(pp, pp.partial_y()).is_zero();
}

namespace {
std::vector<Poly> monic_divisors(const Poly& p) {
  std::vector<Poly> out{Poly(1)};
  for (const auto& [f, e] : factor(p).factors) {
    const size_t base = out.size();
    Poly pw(1);
    for (int k = 1; k <= e; ++k) {
      pw *= f;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

constexpr int kMaxCandidateDegree = 12;
constexpr size_t kMaxCandidatePairs = 20000;
}  // namespace

RootSet rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  RootSet out;
  RatPoly g = f;
  while (g.degree() > 0 && g.coeff(0).is_zero()) {
    g = g.exact_div(RatPoly::x());
    out.roots.emplace_back();
  }
  if (g.degree() > 0) {
    Poly lcm(1);
    for (const auto& c : g.coeffs())
      if (!c.is_zero()) lcm = lcm * c.den() / gcd(lcm, c.den());
    std::vector<Poly> a;
    for (const auto& c : g.coeffs()) a.push_back(c.num() * (lcm / c.den()));
    const int n = g.degree();
    const Poly& a0 = a.front();
    const Poly& an = a.back();

    std::set<RatFunc> candidates;
    if (a0.degree() <= kMaxCandidateDegree && an.degree() <= kMaxCandidateDegree) {
      auto ps = monic_divisors(a0);
      auto qs = monic_divisors(an);
      if (ps.size() * qs.size() <= kMaxCandidatePairs) {
        for (const auto& p : ps) {
          for (const auto& q : qs) {
            if (gcd(p, q).degree() > 0) continue;
            // sum_k a_k p^k q^(n-k) c^k, collected by powers of t, must vanish for the root c p/q
            std::vector<std::vector<Rational>> by_t;
            for (int k = 0; k <= n; ++k) {
              Poly term = a[static_cast<size_t>(k)] * p.pow(static_cast<unsigned>(k)) *
                          q.pow(static_cast<unsigned>(n - k));
              for (int e = 0; e <= term.degree(); ++e) {
                if (by_t.size() <= static_cast<size_t>(e)) by_t.resize(static_cast<size_t>(e) + 1);
                auto& row = by_t[static_cast<size_t>(e)];
                row.resize(static_cast<size_t>(n) + 1);
                row[static_cast<size_t>(k)] += term.coeff(e);
              }
            }
            Poly h;
            for (auto& row : by_t) {
              h = gcd(h, Poly(std::move(row)));
              if (h.degree() == 0) break;
            }
            if (h.degree() < 1) continue;
            for (const auto& c : ffvojta::rational_roots(h))
              if (c != 0) candidates.insert(RatFunc(p * Poly(c), q));
          }
        }
      }
    }
    for (const auto& root : candidates) {
      RatPoly lin(std::vector<RatFunc>{-root, RatFunc(1)});
      for (;;) {
        auto [q, r] = g.divmod(lin);
        if (!r.is_zero()) break;
        g = std::move(q);
        out.roots.push_back(root);
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.complete = static_cast<int>(out.roots.size()) == f.degree();
  return out;
}

std::string_view to_string(LemmaBranch b) {
  switch (b) {
    case LemmaBranch::ConstantQuotient: return "constant_quotient";
    case LemmaBranch::SingularPoint: return "singular_point";
    case LemmaBranch::Bezout: return "bezout";
    case LemmaBranch::AStarZero: return "a_star_zero";
    case LemmaBranch::AStarMultiple: return "a_star_multiple";
  }
  return "unknown";
}

LemmaOutcome check_dependence_lemma(const BiPoly& a, const SUnit& u, const SUnit& v, const RatFunc& alpha,
                                    const RatFunc& beta, long r, long s, const Rational& mu, const OmegaForm& w) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::PreconditionViolated, what); };
  if (alpha.is_zero() || beta.is_zero()) fail("alpha and beta must be nonzero");
  if (std::gcd(r, s) != 1) fail("gcd(|r|, |s|) != 1");
  if (!evaluate(a, alpha, beta).is_zero()) fail("A(alpha, beta) != 0");
  if (!evaluate(b_polynomial(a, u, v, w), alpha, beta).is_zero()) fail("B(alpha, beta) != 0");
  const RatFunc uf = as_ratfunc(u), vf = as_ratfunc(v);
  const RatFunc qu = uf / alpha, qv = vf / beta;
  if (qu.pow(r) * qv.pow(s) != RatFunc(mu)) fail("(u/alpha)^r (v/beta)^s != mu");

  LemmaOutcome out{LemmaBranch::ConstantQuotient, {}, 0};
  if (qu.is_constant() || qv.is_constant()) return out;
  out.gamma = RatFunc(mu) * alpha.pow(r) * beta.pow(s);
  if (uf.pow(r) * vf.pow(s) != out.gamma) fail("u^r v^s != mu alpha^r beta^s");

  if (evaluate(a.partial_x(), alpha, beta).is_zero() && evaluate(a.partial_y(), alpha, beta).is_zero()) {
    out.branch = LemmaBranch::SingularPoint;
    return out;
  }
  const BiPoly star = a_star(a, r, s);
  if (star.is_zero()) {
    out.branch = LemmaBranch::AStarZero;
    return out;
  }
  out.branch = LemmaBranch::Bezout;
  if (star.terms().size() == a.terms().size()) {
    std::optional<RatFunc> ratio;
    bool proportional = true;
    for (const auto& [k, c] : a.terms()) {
      RatFunc q = star.coeff(k.first, k.second) / c;
      if (!ratio) ratio = q;
      if (q.is_zero() || q != *ratio) {
        proportional = false;
        break;
      }
    }
    if (proportional && ratio->is_constant()) {
      out.branch = LemmaBranch::AStarMultiple;
      out.a_star_ratio = ratio->constant_value();
    }
  }
  return out;
}

namespace {
bool slice_certifies(const std::map<BiPoly::Key, Rational>& a0, int dx) {
  // Univariate content in Y must be trivial, and some slice Y = y0 must be
  // irreducible of full X-degree.
  std::vector<Poly> xcoeffs(static_cast<size_t>(dx) + 1);
  for (const auto& [k, c] : a0) xcoeffs[static_cast<size_t>(k.first)] += Poly::monomial(c, k.second);
  Poly content;
  for (const auto& c : xcoeffs) content = gcd(content, c);
  if (content.degree() > 0) return false;
  if (dx == 0) return false;
  for (long y0 : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L, 7L, -7L}) {
    std::vector<Rational> slice(static_cast<size_t>(dx) + 1);
    for (int i = 0; i <= dx; ++i) slice[static_cast<size_t>(i)] = xcoeffs[static_cast<size_t>(i)].eval(y0);
    Poly p(std::move(slice));
    if (p.degree() != dx) continue;
    if (is_irreducible(p)) return true;
  }
  return false;
}
}  // namespace

bool audit_irreducible(const BiPoly& a, int trials, std::uint64_t seed) {
  if (a.is_constant()) return false;
  const int dx = a.deg_x(), dy = a.deg_y();
  std::mt19937_64 rng(seed);
  for (int k = 0; k < trials; ++k) {
    Rational t0(static_cast<long>(rng() % 61) - 30, static_cast<long>(rng() % 7) + 1);
    t0.canonicalize();
    std::map<BiPoly::Key, Rational> a0;
    try {
      a0 = a.at_t(t0);
    } catch (const Error&) {
      continue;
    }
    int sx = 0, sy = 0;
    for (const auto& [key, c] : a0) {
      sx = std::max(sx, key.first);
      sy = std::max(sy, key.second);
    }
    if (sx != dx || sy != dy) continue;
    std::map<BiPoly::Key, Rational> swapped;
    for (const auto& [key, c] : a0) swapped[{key.second, key.first}] = c;
    if (slice_certifies(a0, dx) || slice_certifies(swapped, dy)) return true;
  }
  return false;
}

}  // namespace ffvojta
