#include "ffvojta/p2family.hpp"

#include <algorithm>

#include "ffvojta/error.hpp"

namespace ffvojta {

namespace {

const char* const kNames[5] = {"x0", "x1", "x2", "y0", "y1"};

}  // namespace

BiForm::BiForm(Rational c) {
  c.canonicalize();
  if (c != 0) terms_[Exps{}] = c;
}

BiForm BiForm::var(int index) {
  if (index < 0 || index > 4) throw Error(ErrorCode::InvalidInput, "variable index out of range");
  BiForm f;
  Exps e{};
  e[static_cast<size_t>(index)] = 1;
  f.terms_[e] = 1;
  return f;
}

BiDegree BiForm::bidegree() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "zero form has no bidegree");
  auto of = [](const Exps& e) { return BiDegree{e[0] + e[1] + e[2], e[3] + e[4]}; };
  const BiDegree first = of(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (!(of(e) == first)) throw Error(ErrorCode::InvalidInput, "not bihomogeneous: " + to_string());
  return first;
}

BiForm BiForm::partial(int index) const {
  BiForm out;
  const auto k = static_cast<size_t>(index);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exps d = e;
    --d[k];
    out.terms_[d] = c * e[k];
  }
  return out;
}

BiForm BiForm::pow(unsigned e) const {
  BiForm out(1);
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

BiForm& BiForm::operator+=(const BiForm& o) {
  for (const auto& [e, c] : o.terms_) {
    Rational& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& o) {
  for (const auto& [e, c] : o.terms_) {
    Rational& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

BiForm operator*(const BiForm& a, const BiForm& b) {
  BiForm out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      BiForm::Exps e;
      for (size_t k = 0; k < 5; ++k) e[k] = ea[k] + eb[k];
      Rational& slot = out.terms_[e];
      slot += ca * cb;
      if (slot == 0) out.terms_.erase(e);
    }
  return out;
}

std::string BiForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t k = 0; k < 5; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    const bool neg = c < 0;
    const Rational mag = abs(c);
    std::string piece;
    if (mono.empty())
      piece = ffvojta::to_string(mag);
    else if (mag == 1)
      piece = mono;
    else
      piece = ffvojta::to_string(mag) + "*" + mono;
    if (out.empty())
      out = neg ? "-" + piece : piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

BiDegree log_canonical_bidegree(long d, long l) { return {d - 3, l - 2}; }

BiDegree relative_log_canonical_bidegree(long d, long l) { return {d - 3, l}; }

BiForm jacobian_ramification(const BiForm& g1, const BiForm& g2, const BiForm& g3) {
  const BiForm* g[3] = {&g1, &g2, &g3};
  BiForm m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = g[i]->partial(j);
  BiForm det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det.is_zero()) throw Error(ErrorCode::DegenerateMap, "Jacobian determinant vanishes identically");
  return det;
}

std::pair<BiForm, BiForm> monomial_content(const BiForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "content of the zero form");
  BiForm::Exps low = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    for (size_t k = 0; k < 5; ++k) low[k] = std::min(low[k], e[k]);
  BiForm mono(1);
  for (size_t k = 0; k < 5; ++k) mono = mono * BiForm::var(static_cast<int>(k)).pow(static_cast<unsigned>(low[k]));
  BiForm rest;
  for (const auto& [e, c] : f.terms()) {
    BiForm::Exps d;
    for (size_t k = 0; k < 5; ++k) d[k] = e[k] - low[k];
    BiForm term(c);
    for (size_t k = 0; k < 5; ++k) term = term * BiForm::var(static_cast<int>(k)).pow(static_cast<unsigned>(d[k]));
    rest += term;
  }
  return {mono, rest};
}

QuarticFixture quartic_fixture() {
  const BiForm x0 = BiForm::var(0), x1 = BiForm::var(1), x2 = BiForm::var(2);
  const BiForm y0 = BiForm::var(3), y1 = BiForm::var(4);
  QuarticFixture q;
  q.line0 = y0 * x0;
  q.line1 = y0 * x1;
  q.conic = y0.pow(2) * x2.pow(2) - y0.pow(2) * x1.pow(2) - y1.pow(2) * x1 * x0 - y0.pow(2) * x0.pow(2);
  q.g1 = q.line0.pow(2);
  q.g2 = q.line1.pow(2);
  q.g3 = q.conic;
  q.quartic = q.line0 * q.line1 * q.conic;
  // On x2 = 0 the map is [a : b : c] with a = x0^2, b = x1^2 and
  // c = -(a + b) - t^2 x0 x1, so (a + b + c)^2 = t^4 a b.
  const BiPoly X = BiPoly::x(), Y = BiPoly::y();
  const BiPoly lin = X + Y + BiPoly(RatFunc(1));
  q.image_conic = lin * lin - BiPoly(RatFunc::t().pow(4)) * X * Y;
  // conic degenerates where its Gram determinant 1 - t^4/4 vanishes; the
  // whole fiber collapses at y0 = 0
  q.bad_places = parse_place_set("t^2-2,t^2+2,inf");
  return q;
}

long section_pullback_degree(const BiPoly& a, const SUnit& u, const SUnit& v, const PlaceSet& s) {
  const RatFunc value = evaluate(a, as_ratfunc(u), as_ratfunc(v));
  if (value.is_zero()) throw Error(ErrorCode::SectionInsideZ, "A(u, v) = 0");
  return zeros_outside(value, s);
}

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::BelowThreshold: return "below_threshold";
    case OutcomeKind::Relation: return "relation";
    case OutcomeKind::BoundHolds: return "bound_holds";
    case OutcomeKind::DegenerateOnZ: return "degenerate_on_z";
    case OutcomeKind::Violation: return "violation";
  }
  return "?";
}

OutcomeKind outcome_kind_from_string(const std::string& text) {
  for (auto k : {OutcomeKind::BelowThreshold, OutcomeKind::Relation, OutcomeKind::BoundHolds,
                 OutcomeKind::DegenerateOnZ, OutcomeKind::Violation})
    if (to_string(k) == text) return k;
  throw Error(ErrorCode::ParseError, "unknown outcome kind '" + text + "'");
}

PairOutcome prop_ram_check(const BiPoly& a, const SUnit& u, const SUnit& v, const PlaceSet& s, const Rational& eps,
                           const ThetaLedger& ledger) {
  PairOutcome out;
  out.u = as_ratfunc(u);
  out.v = as_ratfunc(v);
  const RatFunc value = evaluate(a, out.u, out.v);
  if (value.is_zero()) throw Error(ErrorCode::SectionInsideZ, "A(u, v) = 0");
  out.height = std::max(height(out.u), height(out.v));
  out.threshold = ledger.theta1 * std::max(1L, euler_char(s));
  out.lhs = trunc_count(value, s).total;
  out.rhs = eps * out.height;
  const DependenceResult dep = mult_dependence(u, v);
  out.dependent = dep.dependent;
  if (dep.dependent) {
    out.r = dep.r;
    out.s = dep.s;
    out.gamma = dep.gamma;
  }
  if (Rational(out.height) < out.threshold)
    out.kind = OutcomeKind::BelowThreshold;
  else if (dep.dependent && Rational(std::max(std::abs(dep.r), std::abs(dep.s))) <= ledger.theta2)
    out.kind = OutcomeKind::Relation;
  else
    out.kind = Rational(out.lhs) <= out.rhs ? OutcomeKind::BoundHolds : OutcomeKind::Violation;
  return out;
}

}  // namespace ffvojta
