#pragma once

// Numerical audits of the character-sum bounds: every left-hand side is a
// finite sum evaluated numerically and compared with its claimed bound.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppair/characters.hpp"
#include "ppair/hyperplane.hpp"
#include "ppair/power_free.hpp"

namespace ppair {

inline constexpr double kAuditTolerance = 1e-6;

struct AuditRecord {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> parameters;
  double lhs = 0;
  double bound = 0;
  bool pass = false;
  std::optional<double> coarse;  // avoiding-set audit only: (2^m - 1) q^(m/2)
};

/// |sum_{lambda in F} chi(a g(lambda))| <= (d - 1) q^(m/2), d = distinct roots.
AuditRecord audit_weil_single(const CharacterGroup& group, const Character& chi, const ExtPoly& g, const FieldElement& a);
/// |sum chi1(g1) chi2(g2)| <= (k1 + k2 - 1) q^(m/2), k_i = deg rad g_i.
AuditRecord audit_weil_pair(const CharacterGroup& group, const Character& chi1, const Character& chi2, const ExtPoly& g1,
                            const ExtPoly& g2);
/// Sum over the hyperplane A_j (0-based j): bound (d q^(m-1) - 1)/q^(m-1) * q^(m/2).
AuditRecord audit_hyperplane_sum(const CharacterGroup& group, const HyperplaneSystem& sys, const Character& chi,
                                 const ExtPoly& g, unsigned j);
/// |sum_{lambda in S} chi(lambda)| <= delta(q, m) <= (2^m - 1) q^(m/2).
AuditRecord audit_avoiding_sum(const CharacterGroup& group, const HyperplaneSystem& sys, const Character& chi);
/// |sum_{lambda in S} chi(g(lambda))| <= deg(g) 2^m q^(m/2).
AuditRecord audit_af1(const CharacterGroup& group, const HyperplaneSystem& sys, const Character& chi, const ExtPoly& g);
/// |sum_{lambda in S} chi1(g1) chi2(g2)| < (k1 + k2) 2^m q^(m/2), k_i = deg g_i.
AuditRecord audit_af2(const CharacterGroup& group, const HyperplaneSystem& sys, const Character& chi1,
                      const Character& chi2, const ExtPoly& g1, const ExtPoly& g2);

/// sum_{i=0}^{m-1} C(m, i) q^min(i, m/2)
double reis_delta(std::uint64_t q, unsigned m);
double reis_coarse(std::uint64_t q, unsigned m);

struct SweepKindSummary {
  std::string kind;
  std::string polynomials;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;  // precondition not met
  std::optional<AuditRecord> tightest;  // smallest bound - lhs
  std::vector<AuditRecord> violation_records;  // first few
};

struct FieldSweep {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t N = 0;
  std::string quadratic;
  std::vector<SweepKindSummary> kinds;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

struct AuditSweepReport {
  std::uint64_t qm_max = 0;
  std::vector<FieldSweep> fields;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  double seconds = 0;
};

struct AuditSweepOptions {
  bool pairs = true;  // the all-character-pairs sweeps (weil_pair, af2)
  unsigned workers = 1;
};

/// All (q, m) with q a prime power, m >= 2 and q^m <= qm_max, ordered by (q, m).
std::vector<std::pair<std::uint64_t, unsigned>> fields_up_to(std::uint64_t qm_max);

/// Test polynomials x, x + 1 and the default quadratic; hyperplane constants 0.
FieldSweep audit_field(std::uint64_t q, unsigned m, const AuditSweepOptions& options);
AuditSweepReport audit_sweep(std::uint64_t qm_max, const AuditSweepOptions& options);

/// All sums sum_{lambda in D} chi_t1(g1(lambda)) chi_t2(g2(lambda)) over a
/// domain D for 0 <= t2 < N at fixed t1, via one length-N DFT.
std::vector<Complex> pair_sums_for_t1(const CharacterGroup& group, const std::vector<std::uint32_t>& logs1,
                                      const std::vector<std::uint32_t>& logs2, std::uint64_t t1);

}  // namespace ppair
