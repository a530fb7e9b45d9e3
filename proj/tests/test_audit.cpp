#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ppair/audit.hpp"
#include "ppair/error.hpp"

using namespace ppair;

namespace {

ExtPoly linear(const FieldContext& ctx, std::uint32_t c0) { return {ctx.from_base(c0), ctx.one()}; }

// Direct double loop with plain std::complex accumulation.
Complex direct_pair_sum(const CharacterGroup& group, std::uint64_t t1, std::uint64_t t2, const ExtPoly& g1,
                        const ExtPoly& g2, const std::vector<FieldElement>& domain) {
  const FieldContext& ctx = group.field();
  const ExtField F{&ctx};
  const Character c1 = make_character(group, t1), c2 = make_character(group, t2);
  Complex sum = 0;
  for (const auto& a : domain) {
    sum += char_eval(group, c1, poly::evaluate(F, g1, a)) * char_eval(group, c2, poly::evaluate(F, g2, a));
  }
  return sum;
}

}  // namespace

TEST_CASE("batched pair sums equal direct sums") {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {4, 2}, {5, 2}, {2, 5}}) {
    const auto ctx = FieldContext::build_q(q, m);
    const CharacterGroup group(ctx);
    const ExtField F{ctx.get()};
    const ExtPoly g1 = poly::monomial_x(F);
    const ExtPoly g2 = to_poly(default_quadratic(*ctx));
    const HyperplaneSystem sys(ctx, std::vector<std::uint32_t>(m, 0));
    for (const auto& domain : {sys.enumerate_avoiding(), [&] {
           std::vector<FieldElement> all;
           for (std::uint64_t i = 0; i < ctx->size(); ++i) all.push_back(ctx->element_at(i));
           return all;
         }()}) {
      std::vector<std::uint32_t> l1, l2;
      for (const auto& a : domain) {
        l1.push_back(group.log(poly::evaluate(F, g1, a)));
        l2.push_back(group.log(poly::evaluate(F, g2, a)));
      }
      for (std::uint64_t t1 = 0; t1 < group.N(); t1 += 3) {
        const auto sums = pair_sums_for_t1(group, l1, l2, t1);
        REQUIRE(sums.size() == group.N());
        for (std::uint64_t t2 = 0; t2 < group.N(); ++t2) {
          CHECK(std::abs(sums[t2] - direct_pair_sum(group, t1, t2, g1, g2, domain)) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("Weil bound on single characters over F_25") {
  const auto ctx = FieldContext::build_q(5, 2);
  const CharacterGroup group(ctx);
  const ExtField F{ctx.get()};
  const ExtPoly g = to_poly(default_quadratic(*ctx));
  std::uint64_t skipped = 0;
  for (std::uint64_t t = 1; t < group.N(); ++t) {
    try {
      const auto r = audit_weil_single(group, make_character(group, t), g, ctx->one());
      CHECK(r.pass);
      CHECK(r.bound == doctest::Approx(5.0));  // two distinct roots, (2 - 1) q^(m/2)
      std::vector<FieldElement> all;
      for (std::uint64_t i = 0; i < ctx->size(); ++i) all.push_back(ctx->element_at(i));
      CHECK(r.lhs == doctest::Approx(std::abs(direct_pair_sum(group, t, 0, g, poly::constant(F, ctx->one()), all))));
    } catch (const InputError&) {
      ++skipped;
    }
  }
  CHECK(skipped == 0);  // x^2 + x + c0 is squarefree, hence power-free for every order
}

TEST_CASE("Reis bounds") {
  CHECK(reis_delta(4, 2) == doctest::Approx(9.0));
  CHECK(reis_coarse(4, 2) == doctest::Approx(12.0));
  CHECK(reis_delta(3, 3) == doctest::Approx(1 + 3 * 3 + 3 * std::pow(3.0, 1.5)));
  for (std::uint64_t q : {2, 3, 7, 16}) {
    for (unsigned m = 2; m < 8; ++m) CHECK(reis_delta(q, m) <= reis_coarse(q, m) + 1e-9);
  }
}

TEST_CASE("every audit kind passes on a small field") {
  const auto ctx = FieldContext::build_q(3, 3);
  const CharacterGroup group(ctx);
  const ExtField F{ctx.get()};
  const HyperplaneSystem sys(ctx, {1, 0, 2});
  const ExtPoly x = poly::monomial_x(F), x1 = linear(*ctx, 1);
  for (std::uint64_t t = 1; t < group.N(); ++t) {
    const Character chi = make_character(group, t);
    CHECK(audit_avoiding_sum(group, sys, chi).pass);
    CHECK(audit_af1(group, sys, chi, x1).pass);
    for (unsigned j = 0; j < 3; ++j) CHECK(audit_hyperplane_sum(group, sys, chi, x1, j).pass);
    const auto pair = audit_weil_pair(group, chi, make_character(group, (t * 5) % group.N() ? (t * 5) % group.N() : 1), x, x1);
    CHECK(pair.pass);
    CHECK(audit_af2(group, sys, chi, make_character(group, 1), x, x1).pass);
  }
}

TEST_CASE("audit preconditions") {
  const auto ctx = FieldContext::build_q(5, 2);
  const CharacterGroup group(ctx);
  const ExtField F{ctx.get()};
  const ExtPoly x = poly::monomial_x(F);
  const ExtPoly x2 = poly::mul(F, x, x);
  const Character trivial = make_character(group, 0), quad = make_character(group, group.N() / 2);
  CHECK_THROWS_AS(audit_weil_single(group, trivial, x, ctx->one()), InputError);
  CHECK_THROWS_AS(audit_weil_single(group, quad, x2, ctx->one()), InputError);  // x^2 is a square
  CHECK_THROWS_AS(audit_weil_single(group, quad, x, ctx->zero()), InputError);
  CHECK_THROWS_AS(audit_weil_pair(group, quad, quad, x, x2), InputError);  // not coprime
  CHECK_NOTHROW(audit_weil_single(group, make_character(group, 1), x2, ctx->one()));
}

TEST_CASE("a sweep over tiny fields records no violations and serializable records") {
  AuditSweepOptions options;
  options.workers = 2;
  const auto report = audit_sweep(60, options);
  CHECK(report.violations == 0);
  CHECK(report.checks > 0);
  std::vector<std::pair<std::uint64_t, unsigned>> expected = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3},
                                                              {4, 2}, {5, 2}, {7, 2}};
  CHECK(fields_up_to(60) == expected);
  REQUIRE(report.fields.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(report.fields[i].q == expected[i].first);
    CHECK(report.fields[i].m == expected[i].second);
  }
}
