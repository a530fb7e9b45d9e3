#include "ppair/search.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <thread>

#include "ppair/error.hpp"

namespace ppair {

std::string to_string(SearchMode mode) { return mode == SearchMode::Proof ? "proof" : "strict"; }

SearchMode parse_search_mode(const std::string& text) {
  if (text == "proof") return SearchMode::Proof;
  if (text == "strict") return SearchMode::Strict;
  throw InputError("mode must be 'proof' or 'strict', got '" + text + "'");
}

std::uint64_t default_budget() {
  const char* env = std::getenv("PPAIR_BUDGET");
  if (!env || !*env) return SearchConfig::kDefaultBudget;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("PPAIR_BUDGET must be a positive integer, got '") + env + "'");
  }
}

namespace {

struct BlockResult {
  std::uint64_t proof = 0;
  std::uint64_t strict = 0;
  std::uint64_t zero_images = 0;
  std::vector<Witness> witnesses;
};

// Runs fn(i) for i in [0, n) on `workers` threads; rethrows the first error.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (std::size_t i = next++; i < n && !failed; i = next++) {
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < std::max(1u, workers); ++w) threads.emplace_back(run);
  run();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

SearchResult brute_force_pairs(const HyperplaneSystem& sys, const Quadratic& f, const SearchConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const FieldContext& ctx = sys.field();
  validate_quadratic(ctx, f);
  if (sys.avoiding_size() > config.budget) {
    throw BudgetError("avoiding set has " + std::to_string(sys.avoiding_size()) + " elements, budget " +
                      std::to_string(config.budget));
  }
  const std::vector<std::uint32_t> blocks = sys.first_coordinate_values();
  std::vector<BlockResult> results(blocks.size());
  const bool proof_mode = config.mode == SearchMode::Proof;

  parallel_for(blocks.size(), config.workers, [&](std::size_t b) {
    BlockResult& r = results[b];
    sys.for_each_avoiding_block(blocks[b], [&](const FieldElement& alpha) {
      if (ctx.is_zero(alpha)) return;
      const FieldElement y = evaluate(ctx, f, alpha);
      if (ctx.is_zero(y)) {
        ++r.zero_images;
        return;
      }
      if (!ctx.is_primitive(alpha) || !ctx.is_primitive(y)) return;
      ++r.proof;
      const bool in_s = sys.in_avoiding_set(y);
      r.strict += in_s;
      if ((proof_mode || in_s) && r.witnesses.size() < config.witness_limit) r.witnesses.push_back({alpha, y, in_s});
    });
  });

  SearchResult out;
  out.mode = config.mode;
  out.scanned = sys.avoiding_size();
  out.workers = std::max(1u, config.workers);
  for (auto& r : results) {
    out.proof_count += r.proof;
    out.strict_count += r.strict;
    out.zero_images += r.zero_images;
    for (auto& w : r.witnesses) {
      if (out.witnesses.size() < config.witness_limit) out.witnesses.push_back(w);
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string replay_witness(const HyperplaneSystem& sys, const Quadratic& f, const Witness& w, SearchMode mode) {
  const FieldContext& ctx = sys.field();
  const std::string a = ctx.to_string(w.alpha);
  if (!sys.in_avoiding_set(w.alpha)) return "alpha " + a + " lies on a hyperplane";
  if (evaluate(ctx, f, w.alpha) != w.f_alpha) return "f(alpha) does not match for alpha " + a;
  if (ctx.is_zero(w.alpha) || ctx.element_order(w.alpha) != ctx.group_order()) return "alpha " + a + " is not primitive";
  if (ctx.is_zero(w.f_alpha) || ctx.element_order(w.f_alpha) != ctx.group_order()) {
    return "f(alpha) " + ctx.to_string(w.f_alpha) + " is not primitive";
  }
  const bool in_s = sys.in_avoiding_set(w.f_alpha);
  if (in_s != w.f_alpha_in_s) return "membership flag of f(alpha) is wrong";
  if (mode == SearchMode::Strict && !in_s) return "f(alpha) lies on a hyperplane";
  return {};
}

PowerMaskTable::PowerMaskTable(const HyperplaneSystem& sys, const Quadratic& f, std::uint64_t budget)
    : n_(sys.field().group_order()), primes_(sys.field().order_primes()) {
  const FieldContext& ctx = sys.field();
  validate_quadratic(ctx, f);
  if (primes_.size() > 63) throw BudgetError("too many primes for a mask table");
  const auto& cof = ctx.cofactors();
  const FieldElement id = ctx.one();
  auto mask_of = [&](const FieldElement& a) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < cof.size(); ++i) {
      if (ctx.pow(a, cof[i]) == id) mask |= std::uint64_t{1} << i;
    }
    return mask;
  };
  // alpha = 0 is never d-free (it is not a power of the generator).
  sys.for_each_avoiding(
      [&](const FieldElement& alpha) {
        if (ctx.is_zero(alpha)) return;
        const FieldElement y = evaluate(ctx, f, alpha);
        if (ctx.is_zero(y)) return;
        masks_.emplace_back(mask_of(alpha), mask_of(y));
      },
      budget);
}

std::uint64_t PowerMaskTable::prime_mask(std::uint64_t d) const {
  if (d == 0 || n_ % d) throw InputError(std::to_string(d) + " does not divide q^m - 1 = " + std::to_string(n_));
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (d % primes_[i] == 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::uint64_t PowerMaskTable::count_masks(std::uint64_t mask1, std::uint64_t mask2) const {
  std::uint64_t count = 0;
  for (const auto& [m1, m2] : masks_) count += ((m1 & mask1) == 0 && (m2 & mask2) == 0);
  return count;
}

std::uint64_t PowerMaskTable::count(std::uint64_t d1, std::uint64_t d2) const {
  return count_masks(prime_mask(d1), prime_mask(d2));
}

std::uint64_t brute_force_dfree_pairs(const HyperplaneSystem& sys, const Quadratic& f, std::uint64_t d1, std::uint64_t d2) {
  const std::uint64_t n = sys.field().group_order();
  for (std::uint64_t d : {d1, d2}) {
    if (d == 0 || n % d) throw InputError(std::to_string(d) + " does not divide q^m - 1 = " + std::to_string(n));
  }
  return PowerMaskTable(sys, f).count(d1, d2);
}

std::vector<SieveSplitCheck> check_sieving_inequality(const PowerMaskTable& table) {
  const std::size_t w = table.prime_count();
  const std::uint64_t all = (std::uint64_t{1} << w) - 1;
  const auto lhs = static_cast<std::int64_t>(table.count_masks(all, all));
  std::vector<SieveSplitCheck> out;
  for (std::uint64_t core = 0; core <= all; ++core) {
    SieveSplitCheck c;
    c.lhs = lhs;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < w; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (core & bit) {
        c.e *= table.primes()[i];
        continue;
      }
      c.sieving_primes.push_back(table.primes()[i]);
      sum += static_cast<std::int64_t>(table.count_masks(core | bit, core));
      sum += static_cast<std::int64_t>(table.count_masks(core, core | bit));
    }
    const auto s = static_cast<std::int64_t>(c.sieving_primes.size());
    c.rhs = sum - (2 * s - 1) * static_cast<std::int64_t>(table.count_masks(core, core));
    c.holds = c.lhs >= c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ppair
