// Command-line front end: verify, audit, constants, check-bm, quartic-example.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ffvojta/error.hpp"
#include "ffvojta/parser.hpp"
#include "ffvojta/report.hpp"

using namespace ffvojta;

namespace {

std::vector<std::string> split_factors(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';'))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + out);
  f << text;
}

int run_verify(const RunConfig& cfg, const std::string& out) {
  VerifyRun run = verify_th12(cfg);
  const std::string text = emit_report(run);
  emit(text, out);
  const Json counts = outcome_counts(run.outcomes);
  std::cerr << "pairs " << run.outcomes.size() << ": " << counts.dump() << "\n";
  return counts["violation"].get<long>() == 0 ? 0 : 1;
}

int run_audit(const RunConfig& cfg, const std::string& u_text, const std::string& v_text, const std::string& out) {
  const ResolvedConfig rc = resolve(cfg);
  SUnit u, v;
  if (!u_text.empty() && !v_text.empty()) {
    u = sunit_from_ratfunc(parse_ratfunc(u_text), rc.effective);
    v = sunit_from_ratfunc(parse_ratfunc(v_text), rc.effective);
  } else {
    u = generate_one(rc.effective, cfg.max_exponent, cfg.seed, 0);
    v = generate_one(rc.effective, cfg.max_exponent, cfg.seed, 1);
  }
  const AuditReport a = audit_steps(cfg, u, v);
  emit(to_json(a).dump(2) + "\n", out);
  for (const auto& row : a.rows)
    if (!row.holds) return 1;
  for (const auto& c : a.gcd_checks)
    if (!c.holds) return 1;
  return 0;
}

int run_constants(const RunConfig& cfg, const std::string& out) {
  const ResolvedConfig rc = resolve(cfg);
  std::vector<FactorShape> shapes;
  for (const auto& f : rc.factors) shapes.push_back({f.deg_x, f.deg_y, f.h});
  emit(to_json(theta_ledger(shapes, cfg.epsilon)).dump(2) + "\n", out);
  return 0;
}

int run_bm(const std::string& terms_json, const std::string& places, bool places_given, const std::string& out) {
  Json list;
  try {
    list = Json::parse(terms_json);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("terms must be a JSON list of expressions: ") + e.what());
  }
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "terms must be a JSON list of expressions");
  VanishingSum vs;
  for (const auto& item : list) vs.terms.push_back(parse_ratfunc(item.get<std::string>()));
  vs.place_set = places_given ? parse_place_set(places) : PlaceSet();
  if (!places_given)
    for (const auto& w : vs.terms)
      if (!w.is_zero()) vs.place_set = vs.place_set.united(support(w));
  const BmCheck c = check_bm(vs);
  Json j{{"places", vs.place_set.to_string()}};
  j.update(to_json(c));
  emit(j.dump(2) + "\n", out);
  return c.bound.holds ? 0 : 1;
}

int run_quartic(const RunConfig& cfg, const std::string& out) {
  const QuarticFixture q = quartic_fixture();
  const BiForm jac = jacobian_ramification(q.g1, q.g2, q.g3);
  const auto [mono, rest] = monomial_content(jac);
  Json table = Json::array();
  auto row = [&table](const std::string& name, const BiForm& f) {
    const BiDegree d = f.bidegree();
    table.push_back(Json{{"component", name}, {"form", f.to_string()}, {"bidegree", Json::array({d.a, d.b})}});
  };
  row("quartic", q.quartic);
  row("boundary x0", q.line0);
  row("boundary x1", q.line1);
  row("conic", q.conic);
  row("jacobian", jac);
  row("ramification outside boundary", BiForm::var(3).pow(2) * BiForm::var(2));
  const BiDegree lc = log_canonical_bidegree(4, 4), rel = relative_log_canonical_bidegree(4, 4);

  const PlaceSet s = q.bad_places.united(parse_place_set(cfg.places));
  const BiPoly& a = q.image_conic;
  const ThetaLedger ledger = theta_ledger({{a.deg_x(), a.deg_y(), poly_height(a)}}, cfg.epsilon);
  std::vector<PairOutcome> outcomes;
  Json sections = Json::array();
  for (long k = 0; k < cfg.count; ++k) {
    const auto i = static_cast<std::uint64_t>(k);
    const SUnit u = generate_one(s, cfg.max_exponent, cfg.seed, 2 * i);
    const SUnit v = generate_one(s, cfg.max_exponent, cfg.seed, 2 * i + 1);
    PairOutcome o;
    Json entry;
    try {
      o = prop_ram_check(a, u, v, s, cfg.epsilon, ledger);
      entry = to_json(o);
      entry["pullback_degree"] = std::to_string(section_pullback_degree(a, u, v, s));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SectionInsideZ) throw;
      o.kind = OutcomeKind::DegenerateOnZ;
      o.u = as_ratfunc(u);
      o.v = as_ratfunc(v);
      entry = to_json(o);
    }
    o.pair_index = k;
    entry["pair_index"] = k;
    outcomes.push_back(o);
    sections.push_back(std::move(entry));
  }
  Json j{{"jacobian", jac.to_string()},
         {"jacobian_pattern", Json{{"scalar", to_string(rest.terms().begin()->second)}, {"monomial", mono.to_string()}}},
         {"bidegrees", std::move(table)},
         {"log_canonical_bidegree", Json::array({lc.a, lc.b})},
         {"relative_log_canonical_bidegree", Json::array({rel.a, rel.b})},
         {"image_conic", a.to_string()},
         {"bad_places", q.bad_places.to_string()},
         {"section_places", s.to_string()},
         {"summary", Json{{"counts", outcome_counts(outcomes)}, {"ledger", to_json(ledger)}}},
         {"sections", std::move(sections)}};
  emit(j.dump(2) + "\n", out);
  return outcome_counts(outcomes)["violation"].get<long>() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for multiple zeros of A(u, v) at S-units over Q(t)"};
  std::string command, mode_text, config_path, factors_text, epsilon_text, out, u_text, v_text, terms;
  RunConfig cfg;
  app.add_option("command", command, "verify | audit | constants | check-bm | quartic-example");
  app.add_option("--mode", mode_text, "same as the command");
  app.add_option("--config", config_path, "JSON file with poly, factors, places, epsilon, count, ...");
  auto* poly_opt = app.add_option("--poly", cfg.poly, "polynomial in X, Y over Q(t)");
  app.add_option("--factors", factors_text, "irreducible factors separated by ';'");
  auto* places_opt = app.add_option("--places", cfg.places, "comma-separated places, e.g. 0,1,inf");
  app.add_option("--epsilon", epsilon_text, "positive rational p/q");
  auto* count_opt = app.add_option("--count", cfg.count, "number of pairs");
  auto* exp_opt = app.add_option("--max-exponent", cfg.max_exponent, "exponent range of generated units");
  auto* seed_opt = app.add_option("--seed", cfg.seed, "generator seed");
  app.add_option("--workers", cfg.workers, "threads for verify; output does not depend on it");
  app.add_option("--out", out, "write the JSON here instead of stdout");
  app.add_option("--u", u_text, "audit: first unit");
  app.add_option("--v", v_text, "audit: second unit");
  app.add_option("--terms", terms, "check-bm: JSON list of expressions");
  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      // explicit flags win over the file
      RunConfig file = config_from_json(Json::parse(read_file(config_path)));
      if (poly_opt->count()) file.poly = cfg.poly;
      if (places_opt->count()) file.places = cfg.places;
      if (count_opt->count()) file.count = cfg.count;
      if (exp_opt->count()) file.max_exponent = cfg.max_exponent;
      if (seed_opt->count()) file.seed = cfg.seed;
      file.workers = cfg.workers;
      cfg = file;
    }
    if (!factors_text.empty()) cfg.factors = split_factors(factors_text);
    if (!epsilon_text.empty()) cfg.epsilon = parse_rational(epsilon_text);
    if (!command.empty()) cfg.mode = mode_from_string(command);
    if (!mode_text.empty()) cfg.mode = mode_from_string(mode_text);
    switch (cfg.mode) {
      case Mode::Verify: return run_verify(cfg, out);
      case Mode::Audit: return run_audit(cfg, u_text, v_text, out);
      case Mode::Constants: return run_constants(cfg, out);
      case Mode::Bm: return run_bm(terms, cfg.places, places_opt->count() > 0, out);
      case Mode::Quartic: return run_quartic(cfg, out);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
