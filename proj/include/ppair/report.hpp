#pragma once

// JSON and plain-text renderings of every report type. JSON objects carry
// only deterministic content; wall-clock data goes through the timings_*
// helpers so callers can keep it under a separate key.

#include <string>

#include <json.hpp>

#include "ppair/audit.hpp"
#include "ppair/criteria.hpp"

namespace ppair::report {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

Json to_json(const Factorization& f);
Json to_json(const BaseCondition& b);
Json to_json(const SievePlan& p);
Json to_json(const SieveCondition& c);
Json to_json(const SieveSearch& s);
/// m is needed to cut witnesses down to their m coefficients.
Json to_json(const SearchResult& r, unsigned m);
Json to_json(const CriterionReport& r);
Json to_json(const AuditRecord& r);
Json to_json(const AuditSweepReport& r);
Json to_json(const Threshold& t);
Json to_json(const Table1Report& r);
Json to_json(const ExceptionalReport& r);

/// "key=value" lines (as produced by FieldContext::summary) as an object.
Json summary_to_json(const std::string& summary);

Json timings(const CriterionReport& r);

std::string to_text(const CriterionReport& r);
std::string to_text(const AuditSweepReport& r);
std::string to_text(const Threshold& t);
std::string to_text(const Table1Report& r);
std::string to_text(const ExceptionalReport& r);

}  // namespace ppair::report
