#pragma once

// Exhaustive search for primitive pairs (alpha, f(alpha)) with alpha in the
// avoiding set S.
//
// PROOF mode counts alpha in S with alpha and f(alpha) primitive. STRICT mode
// additionally requires f(alpha) in S. Every scan computes both counts.

#include <cstdint>
#include <string>
#include <vector>

#include "ppair/characters.hpp"
#include "ppair/hyperplane.hpp"

namespace ppair {

enum class SearchMode { Proof, Strict };

std::string to_string(SearchMode mode);
/// "proof" or "strict"; throws InputError otherwise.
SearchMode parse_search_mode(const std::string& text);

struct SearchConfig {
  static constexpr std::uint64_t kDefaultBudget = 10'000'000;

  SearchMode mode = SearchMode::Strict;
  std::uint64_t budget = kDefaultBudget;  // max elements scanned
  unsigned workers = 1;
  std::size_t witness_limit = 5;
};

/// kDefaultBudget, or the PPAIR_BUDGET environment variable when set.
std::uint64_t default_budget();

struct Witness {
  FieldElement alpha;
  FieldElement f_alpha;
  bool f_alpha_in_s = false;
};

struct SearchResult {
  SearchMode mode = SearchMode::Strict;
  std::uint64_t scanned = 0;      // |S|
  std::uint64_t proof_count = 0;
  std::uint64_t strict_count = 0;
  std::uint64_t zero_images = 0;  // alpha in S with f(alpha) = 0
  std::vector<Witness> witnesses;  // first qualifying alpha (configured mode), enumeration order
  unsigned workers = 1;
  double seconds = 0;

  std::uint64_t count() const { return mode == SearchMode::Proof ? proof_count : strict_count; }
};

/// BudgetError if |S| > config.budget.
SearchResult brute_force_pairs(const HyperplaneSystem& sys, const Quadratic& f, const SearchConfig& config);

/// Checks a witness from scratch: alpha in S, f(alpha) recomputed, both of
/// order exactly N, and f(alpha) in S in STRICT mode. Empty string on success.
std::string replay_witness(const HyperplaneSystem& sys, const Quadratic& f, const Witness& w, SearchMode mode);

/// Per alpha in S: bitmasks of the primes r | N (in order_primes() order) for
/// which alpha, resp. f(alpha), is an r-th power. Counts P(d1, d2) for any
/// divisors without rescanning.
class PowerMaskTable {
 public:
  PowerMaskTable(const HyperplaneSystem& sys, const Quadratic& f, std::uint64_t budget = SearchConfig::kDefaultBudget);
  /// Bitmask of the primes of N dividing d.
  std::uint64_t prime_mask(std::uint64_t d) const;
  /// alpha in S, f(alpha) != 0, alpha d1-free, f(alpha) d2-free.
  std::uint64_t count(std::uint64_t d1, std::uint64_t d2) const;
  std::uint64_t count_masks(std::uint64_t mask1, std::uint64_t mask2) const;
  std::size_t prime_count() const { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks_;
};

/// P(d1, d2) by brute force. InputError if d1 or d2 does not divide N.
std::uint64_t brute_force_dfree_pairs(const HyperplaneSystem& sys, const Quadratic& f, std::uint64_t d1, std::uint64_t d2);

struct SieveSplitCheck {
  std::uint64_t e = 1;
  std::vector<std::uint64_t> sieving_primes;
  std::int64_t lhs = 0;  // P(N, N)
  std::int64_t rhs = 0;  // sum P(p_i e, e) + sum P(e, p_i e) - (2s - 1) P(e, e)
  bool holds = false;
};

/// The sieving inequality for every split of the distinct primes of N into
/// a core e and sieving primes.
std::vector<SieveSplitCheck> check_sieving_inequality(const PowerMaskTable& table);

}  // namespace ppair
