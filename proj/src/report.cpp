#include "ppair/report.hpp"

#include <iomanip>
#include <sstream>

namespace ppair::report {

namespace {

Json rational(const Rational& r) { return Json{{"exact", r.get_str()}, {"value", r.get_d()}}; }

std::string fmt(double v, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

Json coefficients(const FieldElement& a, unsigned m) { return Json(std::vector<std::uint32_t>(a.c.begin(), a.c.begin() + m)); }

Json string_list(const std::vector<std::string>& v) { return Json(v); }

}  // namespace

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& pp : f.factors) factors.push_back({{"prime", pp.prime.get_str()}, {"exponent", pp.exponent}});
  return {{"n", f.n.get_str()}, {"factors", factors}, {"text", f.to_string()}, {"all_proven", f.all_proven}};
}

Json to_json(const BaseCondition& b) {
  return {{"holds", b.holds}, {"W", b.W.get_str()}, {"lhs_sq", b.lhs_sq.get_str()}, {"rhs_sq", b.rhs_sq.get_str()},
          {"lhs", b.lhs},     {"rhs", b.rhs}};
}

Json to_json(const SievePlan& p) {
  Json primes = Json::array();
  for (const auto& r : p.sieving_primes) primes.push_back(r.get_str());
  return {{"t", p.t},
          {"e", p.e.get_str()},
          {"s", p.s()},
          {"sieving_primes", primes},
          {"delta", rational(p.delta)},
          {"Delta", rational(p.Delta)}};
}

Json to_json(const SieveCondition& c) {
  return {{"holds", c.holds},
          {"lhs_sq", c.lhs_sq.get_str()},
          {"rhs_sq", c.rhs_sq.get_str()},
          {"rhs", rational(c.rhs)},
          {"lhs_value", c.lhs_float},
          {"rhs_value", c.rhs_float}};
}

Json to_json(const SieveSearch& s) {
  Json cands = Json::array();
  for (const auto& c : s.candidates) cands.push_back({{"plan", to_json(c.plan)}, {"condition", to_json(c.condition)}});
  Json out{{"candidates", cands}};
  out["chosen"] = s.chosen ? Json{{"plan", to_json(s.chosen->plan)}, {"condition", to_json(s.chosen->condition)}} : Json();
  out["closest_ratio"] = s.closest_ratio ? Json(*s.closest_ratio) : Json();
  return out;
}

Json to_json(const SearchResult& r, unsigned m) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) {
    w.push_back({{"alpha", coefficients(x.alpha, m)},
                 {"f_alpha", coefficients(x.f_alpha, m)},
                 {"f_alpha_in_avoiding_set", x.f_alpha_in_s}});
  }
  return {{"mode", to_string(r.mode)},         {"scanned", r.scanned},
          {"proof_count", r.proof_count},      {"strict_count", r.strict_count},
          {"count", r.count()},                {"zero_images", r.zero_images},
          {"witnesses", w}};
}

Json summary_to_json(const std::string& summary) {
  Json out = Json::object();
  std::istringstream in(summary);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

Json to_json(const CriterionReport& r) {
  Json out{{"q", r.q},
           {"m", r.m},
           {"method", to_string(r.method)},
           {"q^m-1", to_json(r.qm1)},
           {"discrepancies", string_list(r.discrepancies)},
           {"notes", string_list(r.notes)}};
  out["base"] = r.base ? to_json(*r.base) : Json();
  out["sieve"] = r.sieve ? to_json(*r.sieve) : Json();
  out["exhaustive"] = r.exhaustive ? to_json(*r.exhaustive, r.m) : Json();
  if (r.exhaustive) {
    out["search_inputs"] = {{"f", r.quadratic}, {"c", r.constants}, {"basis", r.basis}};
    out["field"] = summary_to_json(r.field_summary);
    out["witness_replay"] = string_list(r.witness_replay);
  }
  return out;
}

Json timings(const CriterionReport& r) {
  Json out = Json::object();
  for (const auto& [k, v] : r.timings) out[k] = v;
  if (r.exhaustive) {
    out["search_seconds"] = r.exhaustive->seconds;
    out["workers"] = r.exhaustive->workers;
  }
  return out;
}

Json to_json(const AuditRecord& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json out{{"kind", r.kind}, {"parameters", params}, {"lhs", r.lhs}, {"bound", r.bound}, {"pass", r.pass}};
  if (r.coarse) out["coarse_bound"] = *r.coarse;
  return out;
}

Json to_json(const AuditSweepReport& r) {
  Json fields = Json::array();
  for (const auto& f : r.fields) {
    Json kinds = Json::array();
    for (const auto& k : f.kinds) {
      Json v = Json::array();
      for (const auto& rec : k.violation_records) v.push_back(to_json(rec));
      kinds.push_back({{"kind", k.kind},
                       {"polynomials", k.polynomials},
                       {"checks", k.checks},
                       {"violations", k.violations},
                       {"skipped", k.skipped},
                       {"tightest", k.tightest ? to_json(*k.tightest) : Json()},
                       {"violation_records", v}});
    }
    fields.push_back({{"q", f.q},
                      {"m", f.m},
                      {"N", f.N},
                      {"quadratic", f.quadratic},
                      {"checks", f.checks},
                      {"violations", f.violations},
                      {"kinds", kinds}});
  }
  return {{"qm_max", r.qm_max}, {"checks", r.checks}, {"violations", r.violations}, {"fields", fields}};
}

Json to_json(const Threshold& t) {
  return {{"m", t.m},
          {"value", t.value},
          {"published", t.published},
          {"relative_error", t.relative_error},
          {"tolerance", kThresholdTolerance},
          {"within_tolerance", t.within_tolerance}};
}

Json to_json(const Table1Report& r) {
  Json rows = Json::array();
  for (const auto& c : r.rows) {
    const auto& p = c.printed;
    Json row{{"q", p.q},
             {"m", p.m},
             {"omega", c.omega},
             {"printed", {{"e", p.e}, {"s", p.s}, {"delta", p.delta}, {"Delta", p.Delta}, {"lhs", p.lhs}, {"rhs", p.rhs}}},
             {"recomputed", {{"delta", c.delta}, {"Delta", c.Delta}, {"lhs", c.lhs}, {"rhs", c.rhs}}},
             {"relative_error", {{"delta", c.delta_rel}, {"Delta", c.Delta_rel}, {"lhs", c.lhs_rel}, {"rhs", c.rhs_rel}}},
             {"match", {{"delta", c.delta_match}, {"Delta", c.Delta_match}, {"lhs", c.lhs_match}, {"rhs", c.rhs_match}}},
             {"known_slip", c.known_slip},
             {"discrepancies", string_list(c.discrepancies)}};
    row["plan"] = c.plan ? to_json(*c.plan) : Json();
    row["sieve_holds"] = c.condition ? Json(c.condition->holds) : Json();
    rows.push_back(row);
  }
  return {{"rows", rows},
          {"row_count", r.rows.size()},
          {"delta_matches", r.delta_matches},
          {"lhs_matches", r.lhs_matches},
          {"rhs_mismatches", r.rhs_mismatches},
          {"sieve_holds", r.sieve_holds},
          {"tolerances", {{"delta", kDeltaTolerance}, {"lhs", kLhsTolerance}, {"printed", kPrintedTolerance}}}};
}

Json to_json(const ExceptionalReport& r) {
  Json pairs = Json::array();
  for (const auto& c : r.pairs) {
    pairs.push_back({{"q", c.q},
                     {"m", c.m},
                     {"prime_power", c.prime_power},
                     {"base", to_json(c.base)},
                     {"sieve_holds", c.sieve_holds},
                     {"sieve_t", c.sieve_t ? Json(*c.sieve_t) : Json()}});
  }
  return {{"pairs", pairs},
          {"pair_count", r.pairs.size()},
          {"announced", r.announced},
          {"base_false_passes", r.base_false_passes},
          {"sieve_resolved", r.sieve_resolved},
          {"discrepancies", string_list(r.discrepancies)}};
}

// ---- text -------------------------------------------------------------------

std::string to_text(const CriterionReport& r) {
  std::ostringstream os;
  os << "q=" << r.q << " m=" << r.m << "  verdict: " << to_string(r.method) << "\n";
  os << "q^m-1 = " << r.qm1.to_string() << (r.qm1.all_proven ? "" : " (probable primes)") << "\n";
  if (r.base) {
    os << "base condition: " << (r.base->holds ? "holds" : "fails") << "  W=" << r.base->W.get_str()
       << "  lhs=" << fmt(r.base->lhs) << "  rhs=" << fmt(r.base->rhs) << "\n";
  }
  if (r.sieve) {
    if (r.sieve->chosen) {
      const auto& c = *r.sieve->chosen;
      os << "sieve: holds with e=" << c.plan.e.get_str() << " s=" << c.plan.s() << " delta=" << fmt(c.plan.delta.get_d())
         << " Delta=" << fmt(c.plan.Delta.get_d()) << "  lhs=" << fmt(c.condition.lhs_float)
         << "  rhs=" << fmt(c.condition.rhs_float) << "\n";
    } else {
      os << "sieve: no plan holds (" << r.sieve->candidates.size() << " candidates";
      if (r.sieve->closest_ratio) os << ", best lhs/rhs=" << fmt(*r.sieve->closest_ratio);
      os << ")\n";
    }
  }
  if (r.exhaustive) {
    const auto& e = *r.exhaustive;
    os << "search: f=" << r.quadratic << "  c=" << join(r.constants) << "  mode=" << to_string(e.mode) << "\n";
    os << "  scanned=" << e.scanned << " proof_count=" << e.proof_count << " strict_count=" << e.strict_count
       << " zero_images=" << e.zero_images << "\n";
    for (std::size_t i = 0; i < e.witnesses.size(); ++i) {
      const auto& w = e.witnesses[i];
      os << "  witness alpha=[" << join(std::vector<std::uint32_t>(w.alpha.c.begin(), w.alpha.c.begin() + r.m))
         << "] f(alpha)=[" << join(std::vector<std::uint32_t>(w.f_alpha.c.begin(), w.f_alpha.c.begin() + r.m))
         << "] replay=" << (i < r.witness_replay.size() ? r.witness_replay[i] : "-") << "\n";
    }
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  for (const auto& d : r.discrepancies) os << "discrepancy: " << d << "\n";
  return os.str();
}

std::string to_text(const AuditSweepReport& r) {
  std::ostringstream os;
  os << "audit sweep q^m <= " << r.qm_max << ": " << r.fields.size() << " fields, " << r.checks << " checks, "
     << r.violations << " violations\n";
  os << std::left << std::setw(8) << "q" << std::setw(4) << "m" << std::setw(10) << "N" << std::setw(12) << "checks"
     << "violations\n";
  for (const auto& f : r.fields) {
    os << std::setw(8) << f.q << std::setw(4) << f.m << std::setw(10) << f.N << std::setw(12) << f.checks << f.violations
       << "\n";
    for (const auto& k : f.kinds) {
      for (const auto& v : k.violation_records) {
        os << "  VIOLATION " << v.kind << " lhs=" << fmt(v.lhs, 10) << " bound=" << fmt(v.bound, 10) << "\n";
      }
    }
  }
  return os.str();
}

std::string to_text(const Threshold& t) {
  std::ostringstream os;
  os << "m=" << t.m << "  threshold=" << fmt(t.value, 8) << "  published=" << fmt(t.published, 8)
     << "  relative_error=" << fmt(t.relative_error, 4) << "  " << (t.within_tolerance ? "within" : "outside")
     << " tolerance " << kThresholdTolerance << "\n";
  return os.str();
}

std::string to_text(const Table1Report& r) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "q" << std::setw(4) << "m" << std::setw(12) << "e" << std::setw(4) << "s"
     << std::setw(12) << "delta" << std::setw(12) << "Delta" << std::setw(14) << "lhs" << std::setw(14) << "rhs"
     << "flags\n";
  for (const auto& c : r.rows) {
    const auto& p = c.printed;
    std::string flags;
    if (!c.delta_match) flags += " delta";
    if (!c.Delta_match) flags += " Delta";
    if (!c.lhs_match) flags += " lhs";
    if (!c.rhs_match) flags += " rhs";
    if (c.known_slip) flags += " (known slip)";
    os << std::setw(6) << p.q << std::setw(4) << p.m << std::setw(12) << (c.plan ? c.plan->e.get_str() : "-")
       << std::setw(4) << (c.plan ? std::to_string(c.plan->s()) : "-") << std::setw(12) << fmt(c.delta)
       << std::setw(12) << fmt(c.Delta) << std::setw(14) << fmt(c.lhs) << std::setw(14) << fmt(c.rhs)
       << (flags.empty() ? "ok" : "mismatch:" + flags) << "\n";
  }
  os << r.rows.size() << " rows; delta matches " << r.delta_matches << ", lhs matches " << r.lhs_matches
     << ", rhs mismatches " << r.rhs_mismatches << ", sieve holds on " << r.sieve_holds << "\n";
  for (const auto& c : r.rows) {
    for (const auto& d : c.discrepancies) os << "(" << c.printed.q << "," << c.printed.m << "): " << d << "\n";
  }
  return os.str();
}

std::string to_text(const ExceptionalReport& r) {
  std::ostringstream os;
  os << r.pairs.size() << " pairs (announced " << r.announced << "); base condition passes on " << r.base_false_passes
     << "; sieve resolves " << r.sieve_resolved << "\n";
  for (const auto& c : r.pairs) {
    if (c.base.holds || !c.prime_power) {
      os << "(" << c.q << "," << c.m << "): base " << (c.base.holds ? "holds" : "fails")
         << (c.prime_power ? "" : ", q not a prime power") << "\n";
    }
  }
  for (const auto& d : r.discrepancies) os << "discrepancy: " << d << "\n";
  return os.str();
}

}  // namespace ppair::report
