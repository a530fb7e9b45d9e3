#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ppair/error.hpp"
#include "ppair/report.hpp"

namespace ppair::cli {

namespace {

using report::Json;
using Clock = std::chrono::steady_clock;

enum Exit { kOk = 0, kNotProven = 1, kBadInput = 2 };

struct Output {
  std::string command;
  Json inputs = Json::object();
  Json result;
  std::vector<std::string> discrepancies;
  Json timings = Json::object();
  std::string text;
  int code = kOk;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (text.empty() || text[0] == '-' || text[0] == '+') throw std::invalid_argument(text);
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InputError(what + ": '" + text + "' is not a non-negative integer");
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_uint(p, what));
  return out;
}

std::vector<std::uint32_t> to_u32(const std::vector<std::uint64_t>& v, const std::string& what) {
  std::vector<std::uint32_t> out;
  for (auto x : v) {
    if (x > UINT32_MAX) throw InputError(what + ": " + std::to_string(x) + " is out of range");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

int exit_for(Method method) { return method == Method::Unresolved ? kNotProven : kOk; }

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json doc{{"command", o.command},
             {"version", report::kVersion},
             {"inputs", o.inputs},
             {"result", o.result},
             {"discrepancies", o.discrepancies},
             {"exit_code", o.code},
             {"timings", o.timings}};
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
  }
}

void emit_error(const std::string& command, const std::string& kind, const std::string& message,
                const std::string& format, std::ostream& out, std::ostream& err) {
  if (format == "json") {
    Json doc{{"command", command},
             {"version", report::kVersion},
             {"error", {{"type", kind}, {"message", message}}},
             {"exit_code", static_cast<int>(kBadInput)}};
    out << doc.dump(2) << "\n";
  }
  err << "error: " << message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive pairs avoiding affine hyperplanes: criteria, search and audits", "ppair"};
  app.require_subcommand(1);
  std::string format = "text";
  unsigned workers = default_workers();
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", workers, "Worker threads (default: available cores)")->check(CLI::Range(1u, 1024u));
  };

  std::uint64_t q = 0;
  unsigned m = 0;
  std::string mode_text = "strict";

  auto* check = app.add_subcommand("check", "Classify (q, m): base condition, sieve, then exhaustive search");
  check->add_option("--q", q, "Base field order")->required();
  check->add_option("--m", m, "Extension degree")->required();
  check->add_option("--mode", mode_text, "Search mode for the exhaustive fallback")->check(CLI::IsMember({"proof", "strict"}));
  add_common(check);
  add_workers(check);

  std::string f_text, c_text, basis_text;
  std::size_t witness_limit = 5;
  auto* search = app.add_subcommand("search", "Exhaustive search for primitive pairs for one (q, m, f, c)");
  search->add_option("--q", q, "Base field order")->required();
  search->add_option("--m", m, "Extension degree")->required();
  search->add_option("--f", f_text, "Quadratic as element indices a,b,c (default x^2 + x + c0)");
  search->add_option("--c", c_text, "Hyperplane constants c1,...,cm as indices into F_q (default zeros)");
  search->add_option("--basis", basis_text, "Basis as m semicolon-separated coefficient lists (default polynomial basis)");
  search->add_option("--mode", mode_text, "proof or strict")->check(CLI::IsMember({"proof", "strict"}));
  search->add_option("--witnesses", witness_limit, "Maximum witnesses reported");
  add_common(search);
  add_workers(search);

  auto* table1 = app.add_subcommand("table1", "Recompute the bundled sieve table and list mismatches");
  add_common(table1);

  auto* exceptional = app.add_subcommand("exceptional", "Run the base condition and the sieve over the bundled exceptional list");
  add_common(exceptional);

  std::uint64_t qm_max = 2000;
  bool no_pairs = false;
  auto* audit = app.add_subcommand("audit", "Audit every character-sum bound over all fields with q^m <= N");
  audit->add_option("--qm-max", qm_max, "Largest field size")->check(CLI::Range(std::uint64_t{4}, std::uint64_t{1} << 24));
  audit->add_flag("--no-pairs", no_pairs, "Skip the all-character-pair sweeps");
  add_common(audit);
  add_workers(audit);

  std::vector<unsigned> ms;
  auto* thresholds = app.add_subcommand("thresholds", "Asymptotic base-condition thresholds for m = 2, 3, 4");
  thresholds->add_option("--m", ms, "Extension degree(s); default all")->check(CLI::IsMember({2u, 3u, 4u}));
  add_common(thresholds);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  Output o;
  o.command = app.get_subcommands().front()->get_name();
  const auto start = Clock::now();
  try {
    const SearchMode mode = parse_search_mode(mode_text);
    if (*check) {
      ClassifyConfig config;
      config.budget = default_budget();
      config.mode = mode;
      config.workers = workers;
      const CriterionReport r = classify(q, m, config);
      o.inputs = {{"q", q}, {"m", m}, {"mode", to_string(mode)}, {"budget", config.budget}};
      o.inputs["f"] = r.exhaustive ? Json(r.quadratic) : Json("x^2 + x + c0 (default, unused)");
      o.inputs["c"] = r.exhaustive ? Json(r.constants) : Json("zeros (default, unused)");
      o.result = report::to_json(r);
      o.discrepancies = r.discrepancies;
      o.timings = report::timings(r);
      o.text = report::to_text(r);
      o.code = exit_for(r.method);
    } else if (*search) {
      SearchConfig config;
      config.budget = default_budget();
      config.mode = mode;
      config.workers = workers;
      config.witness_limit = witness_limit;
      std::optional<std::vector<std::uint64_t>> f_arg;
      std::optional<std::vector<std::uint32_t>> c_arg;
      std::optional<std::vector<std::vector<std::uint32_t>>> basis_arg;
      if (!f_text.empty()) {
        f_arg = parse_list(f_text, "--f");
        if (f_arg->size() != 3) throw InputError("--f needs exactly three indices a,b,c");
      }
      if (!c_text.empty()) c_arg = to_u32(parse_list(c_text, "--c"), "--c");
      if (!basis_text.empty()) {
        basis_arg.emplace();
        for (const auto& part : split(basis_text, ';')) basis_arg->push_back(to_u32(parse_list(part, "--basis"), "--basis"));
      }
      const CriterionReport r = resolve_pair(q, m, f_arg, c_arg, config, basis_arg);
      o.inputs = {{"q", q},
                  {"m", m},
                  {"mode", to_string(mode)},
                  {"budget", config.budget},
                  {"witness_limit", witness_limit},
                  {"f", r.quadratic},
                  {"c", r.constants},
                  {"basis", r.basis}};
      o.result = report::to_json(r);
      o.discrepancies = r.discrepancies;
      o.timings = report::timings(r);
      o.text = report::to_text(r);
      const bool replay_ok =
          std::all_of(r.witness_replay.begin(), r.witness_replay.end(), [](const std::string& s) { return s == "ok"; });
      o.code = r.exhaustive->count() > 0 && replay_ok ? kOk : kNotProven;
    } else if (*table1) {
      const Table1Report r = table1_regression();
      o.result = report::to_json(r);
      for (const auto& row : r.rows) {
        for (const auto& d : row.discrepancies) {
          o.discrepancies.push_back("(" + std::to_string(row.printed.q) + "," + std::to_string(row.printed.m) + "): " + d);
        }
      }
      o.timings["table1_seconds"] = r.seconds;
      o.text = report::to_text(r);
      o.code = o.discrepancies.empty() ? kOk : kNotProven;
    } else if (*exceptional) {
      const ExceptionalReport r = exceptional_scan();
      o.result = report::to_json(r);
      o.discrepancies = r.discrepancies;
      o.timings["scan_seconds"] = r.seconds;
      o.text = report::to_text(r);
      o.code = r.base_false_passes == 0 && r.discrepancies.empty() ? kOk : kNotProven;
    } else if (*audit) {
      AuditSweepOptions options;
      options.pairs = !no_pairs;
      options.workers = workers;
      const AuditSweepReport r = audit_sweep(qm_max, options);
      o.inputs = {{"qm_max", qm_max}, {"pairs", options.pairs}};
      o.result = report::to_json(r);
      o.timings["sweep_seconds"] = r.seconds;
      o.timings["workers"] = workers;
      o.text = report::to_text(r);
      o.code = r.violations == 0 ? kOk : kNotProven;
    } else if (*thresholds) {
      if (ms.empty()) ms = {2, 3, 4};
      o.inputs = {{"m", ms}};
      o.result = Json::array();
      bool all_ok = true;
      for (unsigned mm : ms) {
        const Threshold t = threshold_for_m(mm);
        o.result.push_back(report::to_json(t));
        o.text += report::to_text(t);
        if (!t.within_tolerance) {
          all_ok = false;
          std::ostringstream d;
          d << "m=" << mm << ": threshold " << t.value << " differs from " << t.published << " by "
            << t.relative_error * 100 << "%";
          o.discrepancies.push_back(d.str());
        }
      }
      o.code = all_ok ? kOk : kNotProven;
    }
  } catch (const InputError& e) {
    emit_error(o.command, "input", e.what(), format, out, err);
    return kBadInput;
  } catch (const BudgetError& e) {
    emit_error(o.command, "budget", e.what(), format, out, err);
    return kBadInput;
  }
  o.timings["wall_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
  emit(o, format, out);
  return o.code;
}

}  // namespace ppair::cli
