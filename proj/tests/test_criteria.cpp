#include <doctest.h>

#include "oracles.hpp"
#include "ppair/criteria.hpp"
#include "ppair/error.hpp"

using namespace ppair;

namespace {

BigInt B(std::uint64_t v) { return BigInt(std::to_string(v)); }

BigInt pw(std::uint64_t b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= B(b);
  return r;
}

}  // namespace

TEST_CASE("base condition agrees with an independent integer evaluation") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 31, 64, 97, 101, 128}) {
    for (unsigned m = 2; m <= 6; ++m) {
      const BigInt n = pw(q, m) - 1;
      if (!n.fits_ulong_p()) continue;
      const std::uint64_t W = std::uint64_t{1} << oracle::trial_factor(n.get_ui()).size();
      const bool expected = pw(q - 1, 2 * m) > pw(4 * q, m) * 9 * B(W) * B(W) * B(1 + W) * B(1 + W);
      const BaseCondition b = base_condition(q, m);
      CHECK(b.holds == expected);
      CHECK(b.W == B(W));
    }
  }
}

TEST_CASE("base condition holds for a large prime field") {
  const BaseCondition b = base_condition(10007, 4);
  CHECK(b.holds);
  CHECK(b.lhs > b.rhs);
}

TEST_CASE("sieve plans use the smallest primes as the core") {
  const Factorization f = factorize_power_minus_one(41, 6);  // 2^4 3 5^2 7 547 ... in increasing order
  const SievePlan plan = make_plan(f, 2);
  CHECK(plan.e == 6);
  CHECK(plan.s() == f.distinct_primes() - 2);
  Rational sum = 0;
  for (const auto& r : plan.sieving_primes) sum += Rational(1, r);
  CHECK(plan.delta == 1 - 2 * sum);
  CHECK(plan.Delta == Rational(2 * static_cast<long>(plan.s()) - 1) / plan.delta + 2);
  CHECK(plan.W_e() == 4);
  CHECK_THROWS_AS(make_plan(f, 0), InputError);  // 1 - 2(1/2 + ...) < 0
  CHECK_THROWS_AS(make_plan(f, static_cast<unsigned>(f.distinct_primes() + 1)), InputError);
}

TEST_CASE("sieve condition is the squared comparison of its two sides") {
  const Factorization f = factorize_power_minus_one(23, 5);
  const SievePlan plan = make_plan(f, 1);
  const SieveCondition c = sieve_condition(23, 5, plan);
  const Rational W(plan.W_e());
  const Rational R = plan.Delta * 3 * 32 * W * W + (plan.Delta + 1) * (Rational(3 * 16) - Rational(1, 2)) * W;
  CHECK(c.rhs == R);
  CHECK(c.holds == (Rational(pw(22, 10)) > Rational(pw(23, 5)) * R * R));
}

TEST_CASE("sieve search picks the smallest working core") {
  const SieveSearch s = sieve_search(41, 6);
  for (const auto& c : s.candidates) CHECK(c.plan.delta > 0);
  if (s.chosen) {
    for (const auto& c : s.candidates) {
      if (c.plan.t < s.chosen->plan.t) CHECK_FALSE(c.condition.holds);
    }
  }
  REQUIRE(s.closest_ratio);
}

TEST_CASE("classification of small fields") {
  ClassifyConfig config;
  const CriterionReport two = classify(2, 2, config);
  CHECK(two.method == Method::Unresolved);
  REQUIRE(two.exhaustive);
  CHECK(two.exhaustive->count() == 0);
  CHECK_FALSE(two.notes.empty());

  const CriterionReport four = classify(4, 2, config);
  CHECK(four.method == Method::Exhaustive);
  REQUIRE(four.exhaustive);
  CHECK(four.exhaustive->count() > 0);
  for (const auto& r : four.witness_replay) CHECK(r == "ok");

  config.allow_search = false;
  CHECK(classify(4, 2, config).method == Method::Unresolved);
  CHECK(classify(10007, 4, config).method == Method::Base);
  CHECK_THROWS_AS(classify(6, 2, config), InputError);
  CHECK_THROWS_AS(classify(5, 1, config), InputError);
}

TEST_CASE("classification respects the exhaustive budget") {
  ClassifyConfig config;
  config.budget = 100;
  const CriterionReport r = classify(3, 5, config);
  CHECK(r.method == Method::Unresolved);
  CHECK_FALSE(r.exhaustive);
}

TEST_CASE("resolve_pair with explicit inputs") {
  SearchConfig config;
  config.mode = SearchMode::Proof;
  const CriterionReport r = resolve_pair(5, 2, std::vector<std::uint64_t>{1, 0, 2}, std::vector<std::uint32_t>{1, 3}, config);
  CHECK(r.method == Method::Exhaustive);
  CHECK(r.constants == std::vector<std::uint32_t>{1, 3});
  REQUIRE(r.exhaustive);
  const auto ctx = FieldContext::build_q(5, 2);
  const Quadratic f{ctx->element_at(1), ctx->element_at(0), ctx->element_at(2)};
  const auto expect = oracle::count_pairs(*ctx, {1, 3}, f);
  CHECK(r.exhaustive->proof_count == expect.proof);
  CHECK(r.exhaustive->strict_count == expect.strict);
  config.budget = 10;
  CHECK_THROWS_AS(resolve_pair(5, 2, std::nullopt, std::nullopt, config), BudgetError);
  config.budget = 1000;
  CHECK_THROWS_AS(resolve_pair(5, 2, std::vector<std::uint64_t>{0, 1, 1}, std::nullopt, config), InputError);
  CHECK_THROWS_AS(resolve_pair(5, 2, std::nullopt, std::vector<std::uint32_t>{5, 0}, config), InputError);
}

TEST_CASE("the threshold is where the asymptotic margin changes sign") {
  const Threshold t = threshold_for_m(4);
  CHECK(t.value > 0);
  CHECK(threshold_margin(t.value * 1.001, 4) > 0);
  CHECK(threshold_margin(t.value * 0.999, 4) < 0);
  CHECK_THROWS_AS(threshold_for_m(5), InputError);
}

TEST_CASE("bundled fixtures load") {
  CHECK(fixtures::table1().size() == 26);
  CHECK(fixtures::exceptional_pairs().size() == 157);
  const auto rows = fixtures::parse_table1("q,m,e,s,delta,Delta,lhs,rhs\n3,2,1,1,0.5,4,1.3,2.5\n");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].q == 3);
  CHECK(rows[0].rhs == doctest::Approx(2.5));
}
