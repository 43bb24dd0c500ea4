#pragma once

#include <string>

#include <json.hpp>

#include "ffvojta/unitsum.hpp"
#include "ffvojta/verify.hpp"

namespace ffvojta {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "ffvojta-report/1";

Json to_json(const IrredLedger& l);
Json to_json(const PairLedger& l);
Json to_json(const ThetaLedger& l);
Json to_json(const PairOutcome& o);
Json to_json(const CountReport& c);
Json to_json(const BoundCheck& b);
Json to_json(const BmCheck& b);
Json to_json(const AuditReport& a);

IrredLedger irred_ledger_from_json(const Json& j);
PairLedger pair_ledger_from_json(const Json& j);
ThetaLedger theta_ledger_from_json(const Json& j);
PairOutcome outcome_from_json(const Json& j);

/// Missing keys keep their defaults. Throws ParseError.
RunConfig config_from_json(const Json& j);

/// Full verification report: schema, config, summary (counts per kind and the
/// ledger) and the outcomes in pair order.
Json report_json(const VerifyRun& run);
std::string emit_report(const VerifyRun& run);
/// Throws ParseError on malformed input or an unknown schema.
VerifyRun parse_report(const std::string& text);
/// Writes emit_report(run) to path. Throws Io.
void write_report(const VerifyRun& run, const std::string& path);

/// Summary counts keyed by kind name, every kind present.
Json outcome_counts(const std::vector<PairOutcome>& outcomes);

}  // namespace ffvojta
