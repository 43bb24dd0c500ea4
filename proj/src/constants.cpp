#include "ffvojta/constants.hpp"

#include "ffvojta/error.hpp"

namespace ffvojta {

namespace {


Rational cube(const Rational& q) { return q * q * q; }

void require_eps(const Rational& eps) {
  if (sgn(eps) <= 0) throw Error(ErrorCode::InvalidInput, "epsilon must be positive");
}

}  // namespace

std::string cube_root_decimal(const Rational& c, int digits) {
  if (sgn(c) < 0) throw Error(ErrorCode::InvalidInput, "negative cube");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(3 * digits));
  Integer n = c.get_num() * scale / c.get_den();
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  std::string s = r.get_str();
  if (digits == 0) return s;
  if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<size_t>(digits), ".");
  return s;
}

IrredLedger irred_ledger(long deg_x, long deg_y, long h, const Rational& eps) {
  if (deg_x < 0 || deg_y < 0 || h < 0 || deg_x + deg_y < 1)
    throw Error(ErrorCode::InvalidInput, "need nonnegative degrees with deg_x + deg_y >= 1 and h >= 0");
  require_eps(eps);
  IrredLedger l;
  l.deg_x = deg_x;
  l.deg_y = deg_y;
  l.h = h;
  l.eps = eps;
  const long deg_a = deg_x + deg_y;
  l.c3 = Rational(2 * std::max(deg_x, deg_y) * (6 + h));
  l.c4 = Rational(2 * deg_x * deg_y);
  l.c5 = l.c4 * (2 * l.c3 * l.c4 + 3);
  l.c6 = 2 * l.c4 * (4 * l.c3 + 1);
  l.c_v = l.c6 + 8 * l.c3 * cube(l.c4) * (1 + deg_a);
  // c7 = 3 * 2^(5/3) * c4^(8/3) * (c5 + c_v)^(1/3)
  l.c7_cubed = Rational(27 * 32) * pow(l.c4, 8) * (l.c5 + l.c_v);
  l.c7_decimal = cube_root_decimal(l.c7_cubed);
  l.c8 = Rational(binomial(static_cast<unsigned long>((deg_a + 1) * (deg_a + 1)), 2)) * (1 + l.c_v);
  const Rational c8_term = 4 * l.c4 * l.c8 / eps;
  l.c9 = max(max(l.c3, 8 * l.c7_cubed / cube(eps)), c8_term);
  l.c10 = max(l.c3, c8_term);
  l.c1 = max(l.c9, l.c10);
  l.c2 = max(Rational(deg_a), 8 * cube(l.c4) / eps);
  l.step5_threshold = 2 * l.c3 * l.c4;
  return l;
}

PairLedger pair_ledger(long deg1, long deg2, long h1, long h2, const Rational& eps) {
  if (deg1 < 1 || deg2 < 1 || h1 < 0 || h2 < 0)
    throw Error(ErrorCode::InvalidInput, "pair degrees must be >= 1 and heights >= 0");
  require_eps(eps);
  PairLedger l;
  l.deg1 = deg1;
  l.deg2 = deg2;
  l.h1 = h1;
  l.h2 = h2;
  l.eps = eps;
  l.d3 = Rational(2 * (deg1 + deg2) * (h1 + h2));
  l.d4 = Rational((deg1 + deg2) * (deg1 + deg2));
  l.d5 = l.d4 * (2 * l.d3 * l.d4 + 3);
  l.d6 = 2 * l.d4 * (4 * l.d3 + 1);
  l.d_v = l.d6 + 4 * l.d3 * cube(l.d4) * (2 + deg1 + deg2);
  l.d7_cubed = Rational(27 * 32) * pow(l.d4, 8) * (l.d5 + l.d_v);
  l.d7_decimal = cube_root_decimal(l.d7_cubed);
  l.d8 = Rational(binomial(static_cast<unsigned long>((deg1 + 1) * (deg1 + 1)), 2)) * (1 + l.d_v);
  l.d1 = max(max(l.d3, 8 * l.d7_cubed / cube(eps)), 4 * l.d4 * l.d8 / eps);
  l.d2 = 8 * cube(l.d4) / eps;
  return l;
}

ThetaLedger theta_ledger(const std::vector<FactorShape>& factors, const Rational& eps) {
  if (factors.empty()) throw Error(ErrorCode::EmptyFactorization, "no factors given");
  require_eps(eps);
  ThetaLedger t;
  t.eps = eps;
  for (const auto& f : factors) t.deg_a += f.deg_x + f.deg_y;
  t.eps_prime = eps / (2 * (t.deg_a + 1) * (t.deg_a + 1));
  t.eps_prime.canonicalize();
  bool first = true;
  auto take = [&first](Rational& best, std::string& source, const Rational& value, std::string name) {
    if (first || best < value) {
      best = value;
      source = std::move(name);
    }
  };
  for (size_t i = 0; i < factors.size(); ++i) {
    t.factors.push_back(irred_ledger(factors[i].deg_x, factors[i].deg_y, factors[i].h, t.eps_prime));
    const auto& l = t.factors.back();
    take(t.theta1, t.theta1_source, l.c1, "C1[" + std::to_string(i) + "]");
    take(t.theta2, t.theta2_source, l.c2, "C2[" + std::to_string(i) + "]");
    first = false;
  }
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j) {
      t.pair_indices.emplace_back(i, j);
      t.pairs.push_back(pair_ledger(factors[i].deg_x + factors[i].deg_y, factors[j].deg_x + factors[j].deg_y,
                                    factors[i].h, factors[j].h, t.eps_prime));
      const auto& l = t.pairs.back();
      const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      take(t.theta1, t.theta1_source, l.d1, "D1" + tag);
      take(t.theta2, t.theta2_source, l.d2, "D2" + tag);
    }
  return t;
}

Rational c2_unit_sum(long m, long deg_pi, long n, long h_mu, const Rational& c3) {
  if (m < 1 || deg_pi < 1 || n < 3 || h_mu < 0) throw Error(ErrorCode::InvalidInput, "need m, deg_pi >= 1, n >= 3");
  Rational share(2, deg_pi);
  share.canonicalize();
  const Rational inner = Rational((n - 1) * (n - 2)) + share + h_mu;
  return max(2 * m * deg_pi * inner, c3);
}

}  // namespace ffvojta
