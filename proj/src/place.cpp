#include "ffvojta/place.hpp"

#include <algorithm>
#include <cassert>

#include "ffvojta/error.hpp"
#include "ffvojta/factor.hpp"
#include "ffvojta/parser.hpp"

namespace ffvojta {

namespace {
constexpr int kMaxPlaceDegree = 8;

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}
}  // namespace

Place Place::finite(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidPlace, "place polynomial must be nonconstant: " + p.to_string());
  if (p.degree() > kMaxPlaceDegree)
    throw Error(ErrorCode::InvalidPlace, "place degree above " + std::to_string(kMaxPlaceDegree) + ": " + p.to_string());
  if (!is_irreducible(p)) throw Error(ErrorCode::InvalidPlace, "reducible over Q: " + p.to_string());
  return Place(p.monic());
}

Place Place::at(const Rational& a) { return Place(Poly::linear(a)); }

Place Place::from_irreducible(Poly p) { return Place(std::move(p)); }

std::optional<Rational> Place::root() const {
  if (is_infinity() || poly_.degree() != 1) return std::nullopt;
  return -poly_.coeff(0);
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() <=> b.is_infinity();
  const int d = a.poly_.degree();
  if (auto c = d <=> b.poly_.degree(); c != 0) return c;
  for (int k = 0; k <= d; ++k) {
    const bool flip = (d + k) % 2 != 0;
    Rational x = a.poly_.coeff(k), y = b.poly_.coeff(k);
    if (flip) {
      x = -x;
      y = -y;
    }
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Place::to_string() const {
  if (is_infinity()) return "inf";
  if (auto r = root()) return r->get_str();
  return poly_.to_string();
}

Place parse_place(std::string_view text) {
  std::string s = trim(text);
  if (s == "inf" || s == "infinity" || s == "oo") return Place::infinity();
  bool literal = !s.empty();
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) literal = false;
  if (literal) return Place::at(parse_rational(s));
  RatFunc f = parse_ratfunc(s);
  if (!f.is_polynomial()) throw Error(ErrorCode::InvalidPlace, "place must be a polynomial: " + s);
  return Place::finite(f.num());
}

long degree(const Divisor& d) {
  long total = 0;
  for (const auto& [p, c] : d) total += c * p.degree();
  return total;
}

PlaceSet::PlaceSet(std::vector<Place> places) : places_(std::move(places)) {
  std::sort(places_.begin(), places_.end());
  places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
}

bool PlaceSet::contains(const Place& p) const { return std::binary_search(places_.begin(), places_.end(), p); }

std::vector<Place> PlaceSet::finite_places() const {
  std::vector<Place> out;
  for (const auto& p : places_)
    if (!p.is_infinity()) out.push_back(p);
  return out;
}

long PlaceSet::geometric_size() const {
  long n = 0;
  for (const auto& p : places_) n += p.degree();
  return n;
}

PlaceSet PlaceSet::united(const PlaceSet& o) const {
  std::vector<Place> all = places_;
  all.insert(all.end(), o.places_.begin(), o.places_.end());
  return PlaceSet(std::move(all));
}

std::string PlaceSet::to_string() const {
  std::string out;
  for (const auto& p : places_) {
    if (!out.empty()) out += ',';
    out += p.to_string();
  }
  return out;
}

PlaceSet parse_place_set(std::string_view text) {
  std::vector<Place> places;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (trim(item).empty()) throw Error(ErrorCode::ParseError, "empty place in list '" + std::string(text) + "'");
    places.push_back(parse_place(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PlaceSet(std::move(places));
}

long ord_at(const RatFunc& f, const Place& p) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "ord_at of 0");
  if (p.is_infinity()) return f.den().degree() - f.num().degree();
  Poly n = f.num(), d = f.den();
  return strip_factor(n, p.poly()) - strip_factor(d, p.poly());
}

Divisor divisor_of(const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "divisor of 0");
  Divisor d;
  for (const auto& [q, e] : factor(f.num()).factors) d[Place::from_irreducible(q)] += e;
  for (const auto& [q, e] : factor(f.den()).factors) d[Place::from_irreducible(q)] -= e;
  if (long inf = f.den().degree() - f.num().degree(); inf != 0) d[Place::infinity()] = inf;
  return d;
}

long height(const RatFunc& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "height of 0");
  const long h = std::max(f.num().degree(), f.den().degree());
#ifndef NDEBUG
  if (h <= 12) {
    long sum = 0;
    for (const auto& [p, c] : divisor_of(f)) sum += p.degree() * std::max(0L, c);
    assert(sum == h);
  }
#endif
  return h;
}

long proj_height(std::span<const RatFunc> fs) {
  // With a common denominator L, the entries become polynomials N_i and the
  // height is max deg N_i - deg gcd(N_i).
  Poly lcm(1);
  bool any = false;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    any = true;
    lcm = lcm * f.den() / gcd(lcm, f.den());
  }
  if (!any) throw Error(ErrorCode::AllZero, "projective height of an all-zero tuple");
  Poly g;
  long top = 0;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    Poly n = f.num() * (lcm / f.den());
    top = std::max<long>(top, n.degree());
    g = gcd(g, n);
  }
  return top - g.degree();
}

std::string OmegaForm::to_string() const { return "dt/(" + denominator.to_string() + ")"; }

OmegaForm choose_omega(const PlaceSet& s) {
  std::vector<Place> linear, quadratic;
  for (const auto& p : s.places()) {
    if (p.is_infinity()) continue;
    if (p.degree() == 1) linear.push_back(p);
    if (p.degree() == 2) quadratic.push_back(p);
  }
  if (s.has_infinity() && !linear.empty())
    return {{linear[0], Place::infinity()}, linear[0].poly()};
  if (linear.size() >= 2) return {{linear[0], linear[1]}, linear[0].poly() * linear[1].poly()};
  if (!quadratic.empty()) return {{quadratic[0]}, quadratic[0].poly()};
  throw Error(ErrorCode::STooSmall, "no pair of polar places of total degree 2 inside {" + s.to_string() + "}");
}

RatFunc deriv_omega(const RatFunc& f, const OmegaForm& w) { return f.derivative() * RatFunc(w.denominator); }

}  // namespace ffvojta
