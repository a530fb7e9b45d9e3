#pragma once

// Exact sufficient conditions for the existence of primitive pairs, the sieve
// plan search, the asymptotic thresholds and (q, m) classification.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppair/fixtures.hpp"
#include "ppair/numtheory.hpp"
#include "ppair/search.hpp"

namespace ppair {

struct BaseCondition {
  bool holds = false;
  BigInt W;       // W(q^m - 1)
  BigInt lhs_sq;  // (q-1)^(2m)
  BigInt rhs_sq;  // (4q)^m * 9 W^2 (1+W)^2
  double lhs = 0;  // ((q-1)/(2 sqrt q))^m
  double rhs = 0;  // 3 W (1+W)
};

/// ((q-1)/(2 sqrt q))^m > 3 W (1 + W), decided on the squared integers.
/// q need not be a prime power here; callers validate when it matters.
BaseCondition base_condition(std::uint64_t q, unsigned m, const Factorization& qm1);
BaseCondition base_condition(std::uint64_t q, unsigned m);

struct SievePlan {
  unsigned t = 0;                      // number of core primes
  BigInt e = 1;                        // product of the t smallest primes of q^m - 1
  std::vector<BigInt> sieving_primes;  // the remaining primes
  Rational delta;                      // 1 - 2 sum 1/p_i
  Rational Delta;                      // (2s - 1)/delta + 2

  std::size_t s() const { return sieving_primes.size(); }
  BigInt W_e() const;                  // 2^t
};

/// Throws InputError when t exceeds the number of distinct primes, and when
/// delta <= 0 (the plan is unusable).
SievePlan make_plan(const Factorization& qm1, unsigned t);

struct SieveCondition {
  bool holds = false;
  Rational lhs_sq;  // (q-1)^(2m)
  Rational rhs_sq;  // q^m R^2
  Rational rhs;     // R = Delta 3 2^m W(e)^2 + (Delta + 1)(3 2^(m-1) - 1/2) W(e)
  double lhs_float = 0;  // ((q-1)/sqrt q)^m
  double rhs_float = 0;  // R
};

SieveCondition sieve_condition(std::uint64_t q, unsigned m, const SievePlan& plan);

struct SieveCandidate {
  SievePlan plan;
  SieveCondition condition;
};

struct SieveSearch {
  std::optional<SieveCandidate> chosen;  // smallest t that holds
  std::vector<SieveCandidate> candidates;  // every plan with delta > 0, in t order
  std::optional<double> closest_ratio;  // max over candidates of lhs / rhs
};

SieveSearch sieve_search(std::uint64_t q, unsigned m, const Factorization& qm1);
SieveSearch sieve_search(std::uint64_t q, unsigned m);

struct Threshold {
  unsigned m = 0;
  double value = 0;      // smallest Q with the asymptotic base condition for all q > Q
  double published = 0;  // value to compare against
  double relative_error = 0;
  bool within_tolerance = false;
};

inline constexpr double kThresholdTolerance = 0.05;

/// m in {2, 3, 4}; otherwise InputError.
Threshold threshold_for_m(unsigned m);
/// log of the asymptotic base-condition margin at q: m log((q-1)/(2 sqrt q)) - log(3B(1+B)),
/// B = (q^m)^(0.96 / log log q^m). Positive means the condition holds.
double threshold_margin(double q, unsigned m);

enum class Method { Base, Sieve, Exhaustive, Unresolved };
std::string to_string(Method method);

struct ClassifyConfig {
  std::uint64_t budget = SearchConfig::kDefaultBudget;  // exhaustive budget on q^m
  SearchMode mode = SearchMode::Strict;
  unsigned workers = 1;
  std::size_t witness_limit = 5;
  bool allow_search = true;
};

struct CriterionReport {
  std::uint64_t q = 0;
  unsigned m = 0;
  Method method = Method::Unresolved;
  Factorization qm1;
  std::optional<BaseCondition> base;
  std::optional<SieveSearch> sieve;
  std::optional<SearchResult> exhaustive;
  std::string quadratic;    // echo of f used by the search
  std::vector<std::uint32_t> constants;  // echo of c used by the search
  std::vector<std::vector<std::uint32_t>> basis;  // echo of the basis, coefficient lists
  std::string field_summary;
  std::vector<std::string> witness_replay;  // one entry per witness, "ok" or the failure
  std::vector<std::string> discrepancies;
  std::vector<std::string> notes;
  std::map<std::string, double> timings;
};

/// BASE, then SIEVE, then (q^m <= budget) the exhaustive search with default
/// f and c. EXHAUSTIVE is reported only when a witness exists; a zero count
/// leaves the verdict UNRESOLVED with the search attached.
CriterionReport classify(std::uint64_t q, unsigned m, const ClassifyConfig& config);

/// Exhaustive search for one (q, m, f, c): always EXHAUSTIVE (count may be
/// zero), witnesses replayed before they are returned. An empty f, c or
/// basis uses the defaults. BudgetError when q^m > config.budget.
CriterionReport resolve_pair(std::uint64_t q, unsigned m, const std::optional<std::vector<std::uint64_t>>& f_arg,
                             const std::optional<std::vector<std::uint32_t>>& c_arg, const SearchConfig& config,
                             const std::optional<std::vector<std::vector<std::uint32_t>>>& basis_arg = std::nullopt);

/// Quadratic from element indices (a, b, c); InputError if invalid.
Quadratic quadratic_from_indices(const FieldContext& ctx, const std::vector<std::uint64_t>& abc);

// ---- regression against the bundled table ----------------------------------

struct Table1Check {
  fixtures::Table1Row printed;
  std::optional<SievePlan> plan;
  std::optional<SieveCondition> condition;
  unsigned omega = 0;
  double delta = 0, Delta = 0, lhs = 0, rhs = 0;
  double delta_rel = 0, lhs_rel = 0, rhs_rel = 0, Delta_rel = 0;
  bool delta_match = false;
  bool lhs_match = false;
  bool rhs_match = false;
  bool Delta_match = false;
  bool known_slip = false;
  std::vector<std::string> discrepancies;
  double seconds = 0;
};

struct Table1Report {
  std::vector<Table1Check> rows;
  std::size_t delta_matches = 0;
  std::size_t lhs_matches = 0;
  std::size_t rhs_mismatches = 0;
  std::size_t sieve_holds = 0;
  double seconds = 0;
};

inline constexpr double kDeltaTolerance = 2e-3;
inline constexpr double kLhsTolerance = 1e-4;
/// The printed table has 6 significant digits.
inline constexpr double kPrintedTolerance = 1e-4;

Table1Report table1_regression();

struct ExceptionalCheck {
  std::uint64_t q = 0;
  unsigned m = 0;
  bool prime_power = true;
  BaseCondition base;
  bool sieve_holds = false;
  std::optional<unsigned> sieve_t;
};

struct ExceptionalReport {
  std::vector<ExceptionalCheck> pairs;
  std::size_t announced = fixtures::kAnnouncedExceptionalCount;
  std::size_t base_false_passes = 0;  // pairs where the base condition holds
  std::size_t sieve_resolved = 0;
  std::vector<std::string> discrepancies;
  double seconds = 0;
};

ExceptionalReport exceptional_scan();

}  // namespace ppair
