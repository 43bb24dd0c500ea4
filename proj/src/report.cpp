#include "ffvojta/report.hpp"

#include <fstream>

#include "ffvojta/error.hpp"
#include "ffvojta/parser.hpp"

namespace ffvojta {

namespace {

std::string str(const Rational& q) { return to_string(q); }
std::string str(long n) { return std::to_string(n); }

Rational rat(const Json& j) { return parse_rational(j.get<std::string>()); }
long num(const Json& j) {
  const Rational q = rat(j);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw Error(ErrorCode::ParseError, "expected an integer, got " + j.get<std::string>());
  return q.get_num().get_si();
}

}  // namespace

Json to_json(const IrredLedger& l) {
  return Json{{"deg_x", l.deg_x},
              {"deg_y", l.deg_y},
              {"h", l.h},
              {"eps", str(l.eps)},
              {"c3", str(l.c3)},
              {"c4", str(l.c4)},
              {"c5", str(l.c5)},
              {"c6", str(l.c6)},
              {"c_v", str(l.c_v)},
              {"c7_cubed", str(l.c7_cubed)},
              {"c7", l.c7_decimal},
              {"c8", str(l.c8)},
              {"c9", str(l.c9)},
              {"c10", str(l.c10)},
              {"c1", str(l.c1)},
              {"c2", str(l.c2)},
              {"step5_threshold", str(l.step5_threshold)}};
}

Json to_json(const PairLedger& l) {
  return Json{{"deg1", l.deg1},
              {"deg2", l.deg2},
              {"h1", l.h1},
              {"h2", l.h2},
              {"eps", str(l.eps)},
              {"d3", str(l.d3)},
              {"d4", str(l.d4)},
              {"d5", str(l.d5)},
              {"d6", str(l.d6)},
              {"d_v", str(l.d_v)},
              {"d7_cubed", str(l.d7_cubed)},
              {"d7", l.d7_decimal},
              {"d8", str(l.d8)},
              {"d1", str(l.d1)},
              {"d2", str(l.d2)}};
}

Json to_json(const ThetaLedger& l) {
  Json factors = Json::array(), pairs = Json::array();
  for (const auto& f : l.factors) factors.push_back(to_json(f));
  for (size_t k = 0; k < l.pairs.size(); ++k) {
    Json p{{"i", l.pair_indices[k].first}, {"j", l.pair_indices[k].second}};
    p.update(to_json(l.pairs[k]));
    pairs.push_back(std::move(p));
  }
  return Json{{"eps", str(l.eps)},
              {"eps_prime", str(l.eps_prime)},
              {"deg_a", l.deg_a},
              {"factors", std::move(factors)},
              {"pairs", std::move(pairs)},
              {"theta1", str(l.theta1)},
              {"theta1_source", l.theta1_source},
              {"theta2", str(l.theta2)},
              {"theta2_source", l.theta2_source}};
}

IrredLedger irred_ledger_from_json(const Json& j) {
  IrredLedger l;
  l.deg_x = j.at("deg_x").get<long>();
  l.deg_y = j.at("deg_y").get<long>();
  l.h = j.at("h").get<long>();
  l.eps = rat(j.at("eps"));
  l.c3 = rat(j.at("c3"));
  l.c4 = rat(j.at("c4"));
  l.c5 = rat(j.at("c5"));
  l.c6 = rat(j.at("c6"));
  l.c_v = rat(j.at("c_v"));
  l.c7_cubed = rat(j.at("c7_cubed"));
  l.c7_decimal = j.at("c7").get<std::string>();
  l.c8 = rat(j.at("c8"));
  l.c9 = rat(j.at("c9"));
  l.c10 = rat(j.at("c10"));
  l.c1 = rat(j.at("c1"));
  l.c2 = rat(j.at("c2"));
  l.step5_threshold = rat(j.at("step5_threshold"));
  return l;
}

PairLedger pair_ledger_from_json(const Json& j) {
  PairLedger l;
  l.deg1 = j.at("deg1").get<long>();
  l.deg2 = j.at("deg2").get<long>();
  l.h1 = j.at("h1").get<long>();
  l.h2 = j.at("h2").get<long>();
  l.eps = rat(j.at("eps"));
  l.d3 = rat(j.at("d3"));
  l.d4 = rat(j.at("d4"));
  l.d5 = rat(j.at("d5"));
  l.d6 = rat(j.at("d6"));
  l.d_v = rat(j.at("d_v"));
  l.d7_cubed = rat(j.at("d7_cubed"));
  l.d7_decimal = j.at("d7").get<std::string>();
  l.d8 = rat(j.at("d8"));
  l.d1 = rat(j.at("d1"));
  l.d2 = rat(j.at("d2"));
  return l;
}

ThetaLedger theta_ledger_from_json(const Json& j) {
  ThetaLedger l;
  l.eps = rat(j.at("eps"));
  l.eps_prime = rat(j.at("eps_prime"));
  l.deg_a = j.at("deg_a").get<long>();
  for (const auto& f : j.at("factors")) l.factors.push_back(irred_ledger_from_json(f));
  for (const auto& p : j.at("pairs")) {
    l.pair_indices.emplace_back(p.at("i").get<size_t>(), p.at("j").get<size_t>());
    l.pairs.push_back(pair_ledger_from_json(p));
  }
  l.theta1 = rat(j.at("theta1"));
  l.theta1_source = j.at("theta1_source").get<std::string>();
  l.theta2 = rat(j.at("theta2"));
  l.theta2_source = j.at("theta2_source").get<std::string>();
  return l;
}

Json to_json(const PairOutcome& o) {
  Json j{{"pair_index", o.pair_index},
         {"kind", to_string(o.kind)},
         {"u", o.u.to_string()},
         {"v", o.v.to_string()},
         {"height", str(o.height)},
         {"threshold", str(o.threshold)}};
  if (o.kind != OutcomeKind::DegenerateOnZ) {
    j["lhs"] = str(o.lhs);
    j["rhs"] = str(o.rhs);
  }
  j["dependent"] = o.dependent;
  if (o.dependent) {
    j["r"] = str(o.r);
    j["s"] = str(o.s);
    j["gamma"] = o.gamma.to_string();
  }
  return j;
}

PairOutcome outcome_from_json(const Json& j) {
  PairOutcome o;
  o.pair_index = j.at("pair_index").get<long>();
  o.kind = outcome_kind_from_string(j.at("kind").get<std::string>());
  o.u = parse_ratfunc(j.at("u").get<std::string>());
  o.v = parse_ratfunc(j.at("v").get<std::string>());
  o.height = num(j.at("height"));
  o.threshold = rat(j.at("threshold"));
  if (j.contains("lhs")) {
    o.lhs = num(j.at("lhs"));
    o.rhs = rat(j.at("rhs"));
  }
  o.dependent = j.at("dependent").get<bool>();
  if (o.dependent) {
    o.r = num(j.at("r"));
    o.s = num(j.at("s"));
    o.gamma = parse_ratfunc(j.at("gamma").get<std::string>());
  }
  return o;
}

Json to_json(const CountReport& c) {
  Json per = Json::object();
  for (const auto& [place, n] : c.per_place) per[place.to_string()] = str(n);
  return Json{{"total", str(c.total)}, {"per_place", std::move(per)}};
}

Json to_json(const BoundCheck& b) {
  return Json{{"lhs", str(b.lhs)}, {"rhs", str(b.rhs)}, {"cubed", b.cubed}, {"holds", b.holds}, {"detail", b.detail}};
}

Json to_json(const BmCheck& b) {
  Json table = Json::array();
  for (const auto& row : b.deficits)
    table.push_back(Json{{"place", row.place.to_string()}, {"m", str(row.m)}, {"deficit", str(row.deficit)}});
  Json j = to_json(b.bound);
  j["deficits"] = std::move(table);
  return j;
}

Json to_json(const AuditReport& a) {
  Json j{{"a", a.a.to_string()}, {"b", a.b.to_string()}, {"u", a.u.to_string()}, {"v", a.v.to_string()}};
  Json step1{{"coprime", a.coprime}};
  if (!a.coprime) {
    step1["ratio"] = a.step1_ratio->to_string();
    step1["r"] = str(a.r);
    step1["s"] = str(a.s);
    step1["gamma"] = a.gamma.to_string();
    j["step1"] = std::move(step1);
    return j;
  }
  j["step1"] = std::move(step1);
  j["step2"] = Json{{"f", a.f.to_string('X')},
                    {"g", a.g.to_string('Y')},
                    {"deg_b", str(a.deg_b)},
                    {"deg_f", str(a.deg_f)},
                    {"deg_g", str(a.deg_g)},
                    {"c4", str(a.c4)},
                    {"degrees_hold", a.step2_degrees_hold},
                    {"height_b", str(a.height_b)},
                    {"height_f", str(a.height_f)},
                    {"height_g", str(a.height_g)},
                    {"c3_bound", str(a.c3_bound)},
                    {"heights_hold", a.step2_heights_hold}};
  Json rf = Json::array(), rg = Json::array(), z = Json::array();
  for (const auto& x : a.roots_f) rf.push_back(x.to_string());
  for (const auto& y : a.roots_g) rg.push_back(y.to_string());
  for (const auto& [x, y] : a.z_set) z.push_back(Json::array({x.to_string(), y.to_string()}));
  j["roots_f"] = std::move(rf);
  j["roots_g"] = std::move(rg);
  j["z"] = std::move(z);
  j["v_places"] = a.v_set.to_string();
  j["split_case_only"] = true;
  Json rows = Json::array();
  for (const auto& row : a.rows) {
    auto ord_text = [](long n) { return n >= kInfiniteOrder ? std::string("inf") : std::to_string(n); };
    rows.push_back(Json{{"place", row.place.to_string()},
                        {"ord_a", ord_text(row.ord_a)},
                        {"ord_b", ord_text(row.ord_b)},
                        {"rhs", ord_text(row.rhs)},
                        {"holds", row.holds}});
  }
  j["pointwise"] = std::move(rows);
  Json checks = Json::array();
  for (const auto& c : a.gcd_checks) checks.push_back(to_json(c));
  j["gcd_checks"] = std::move(checks);
  return j;
}

Json outcome_counts(const std::vector<PairOutcome>& outcomes) {
  Json counts = Json::object();
  for (auto k : {OutcomeKind::BelowThreshold, OutcomeKind::Relation, OutcomeKind::BoundHolds,
                 OutcomeKind::DegenerateOnZ, OutcomeKind::Violation})
    counts[to_string(k)] = 0;
  for (const auto& o : outcomes) counts[to_string(o.kind)] = counts[to_string(o.kind)].get<long>() + 1;
  return counts;
}

RunConfig config_from_json(const Json& c) {
  try {
    RunConfig cfg;
    if (c.contains("poly")) cfg.poly = c.at("poly").get<std::string>();
    if (c.contains("factors")) cfg.factors = c.at("factors").get<std::vector<std::string>>();
    if (c.contains("places")) cfg.places = c.at("places").get<std::string>();
    if (c.contains("epsilon")) cfg.epsilon = rat(c.at("epsilon"));
    if (c.contains("count")) cfg.count = c.at("count").get<long>();
    if (c.contains("max_exponent")) cfg.max_exponent = c.at("max_exponent").get<long>();
    if (c.contains("seed")) cfg.seed = c.at("seed").get<std::uint64_t>();
    if (c.contains("mode")) cfg.mode = mode_from_string(c.at("mode").get<std::string>());
    return cfg;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed config: ") + e.what());
  }
}

Json report_json(const VerifyRun& run) {
  const RunConfig& c = run.config;
  Json factors = Json::array();
  for (const auto& f : run.factors)
    factors.push_back(Json{{"expr", f.expr}, {"deg_x", f.deg_x}, {"deg_y", f.deg_y}, {"h", f.h}, {"attested", f.attested}});
  Json config{{"poly", c.poly},
              {"factors", c.factors},
              {"places", c.places},
              {"epsilon", str(c.epsilon)},
              {"count", c.count},
              {"max_exponent", c.max_exponent},
              {"seed", c.seed},
              {"mode", to_string(c.mode)}};
  Json outcomes = Json::array();
  for (const auto& o : run.outcomes) outcomes.push_back(to_json(o));
  return Json{{"schema", kReportSchema},
              {"config", std::move(config)},
              {"factors", std::move(factors)},
              {"effective_places", run.effective_places},
              {"summary", Json{{"counts", outcome_counts(run.outcomes)}, {"ledger", to_json(run.ledger)}}},
              {"outcomes", std::move(outcomes)}};
}

std::string emit_report(const VerifyRun& run) { return report_json(run).dump(2) + "\n"; }

VerifyRun parse_report(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema)
      throw Error(ErrorCode::ParseError, "unknown report schema " + j.at("schema").dump());
    VerifyRun run;
    run.config = config_from_json(j.at("config"));
    for (const auto& f : j.at("factors"))
      run.factors.push_back({f.at("expr").get<std::string>(), f.at("deg_x").get<long>(), f.at("deg_y").get<long>(),
                             f.at("h").get<long>(), f.at("attested").get<bool>()});
    run.effective_places = j.at("effective_places").get<std::string>();
    run.ledger = theta_ledger_from_json(j.at("summary").at("ledger"));
    for (const auto& o : j.at("outcomes")) run.outcomes.push_back(outcome_from_json(o));
    return run;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

void write_report(const VerifyRun& run, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path);
  out << emit_report(run);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace ffvojta
