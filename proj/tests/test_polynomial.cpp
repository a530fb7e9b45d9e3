#include <doctest.h>

#include "oracles.hpp"
#include "ppair/error.hpp"
#include "ppair/power_free.hpp"

using namespace ppair;

namespace {

bool has_root(const FieldContext& ctx, const ExtPoly& g) {
  const ExtField F{&ctx};
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    if (ctx.is_zero(poly::evaluate(F, g, ctx.element_at(i)))) return true;
  }
  return false;
}

// Distinct monic irreducibles of degree 1..3, found by root search (a cubic
// or quadratic without roots is irreducible).
std::vector<ExtPoly> irreducibles(const FieldContext& ctx, std::mt19937_64& rng, std::size_t count) {
  const ExtField F{&ctx};
  std::vector<ExtPoly> out;
  std::uniform_int_distribution<int> deg(1, 3);
  while (out.size() < count) {
    const int d = deg(rng);
    ExtPoly g(d + 1);
    for (int i = 0; i < d; ++i) g[i] = oracle::random_element(ctx, rng);
    g[d] = ctx.one();
    if (d > 1 && has_root(ctx, g)) continue;
    bool dup = false;
    for (const auto& h : out) dup = dup || poly::equal(F, g, h);
    if (!dup) out.push_back(g);
  }
  return out;
}

ExtPoly power(const FieldContext& ctx, const ExtPoly& g, std::uint64_t k) {
  const ExtField F{&ctx};
  ExtPoly r = poly::constant(F, ctx.one());
  for (std::uint64_t i = 0; i < k; ++i) r = poly::mul(F, r, g);
  return r;
}

}  // namespace

TEST_CASE("division with remainder") {
  const auto ctx = FieldContext::build_q(4, 2);
  const ExtField F{ctx.get()};
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    ExtPoly a(7), b(3);
    for (auto& c : a) c = oracle::random_element(*ctx, rng);
    for (auto& c : b) c = oracle::random_element(*ctx, rng);
    b.back() = oracle::random_element(*ctx, rng, true);
    poly::trim(F, a);
    const auto [quot, rem] = poly::divmod(F, a, b);
    CHECK(poly::equal(F, poly::add(F, poly::mul(F, quot, b), rem), a));
    CHECK(poly::degree<ExtField>(rem) < poly::degree<ExtField>(b));
  }
}

TEST_CASE("Rabin irreducibility agrees with root search for degree 2 and 3") {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}}) {
    const auto ctx = FieldContext::build_q(q, m);
    const ExtField F{ctx.get()};
    std::mt19937_64 rng(q * m);
    for (int trial = 0; trial < 200; ++trial) {
      const int d = 2 + trial % 2;
      ExtPoly g(d + 1);
      for (int i = 0; i < d; ++i) g[i] = oracle::random_element(*ctx, rng);
      g[d] = ctx->one();
      CHECK(poly::is_irreducible(F, g) == !has_root(*ctx, g));
    }
  }
}

TEST_CASE("squarefree decomposition reconstructs the input") {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {4, 2}, {5, 2}}) {
    const auto ctx = FieldContext::build_q(q, m);
    const ExtField F{ctx.get()};
    std::mt19937_64 rng(7 * q + m);
    for (int trial = 0; trial < 30; ++trial) {
      const auto irr = irreducibles(*ctx, rng, 3);
      ExtPoly a = poly::constant(F, ctx->one());
      std::uniform_int_distribution<int> k(0, static_cast<int>(2 * ctx->p()));
      for (const auto& g : irr) a = poly::mul(F, a, power(*ctx, g, k(rng)));
      if (poly::degree<ExtField>(a) < 1) continue;
      const auto parts = poly::squarefree_decomposition(F, a);
      ExtPoly back = poly::constant(F, ctx->one());
      for (const auto& [s, mult] : parts) {
        CHECK(poly::degree<ExtField>(poly::gcd(F, s, poly::derivative(F, s))) == 0);
        back = poly::mul(F, back, power(*ctx, s, mult));
      }
      CHECK(poly::equal(F, back, poly::make_monic(F, a)));
    }
  }
}

TEST_CASE("power-freeness against known factorizations") {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {7, 2}}) {
    const auto ctx = FieldContext::build_q(q, m);
    const ExtField F{ctx.get()};
    std::mt19937_64 rng(11 * q + m);
    std::uniform_int_distribution<std::uint64_t> mult(0, 4), expo(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
      const auto irr = irreducibles(*ctx, rng, 3);
      // two inputs, each a product of the irreducibles with chosen multiplicities
      std::vector<std::vector<std::uint64_t>> k(2, std::vector<std::uint64_t>(irr.size()));
      std::vector<std::pair<ExtPoly, std::uint64_t>> inputs;
      for (auto& row : k) {
        ExtPoly g = poly::constant(F, oracle::random_element(*ctx, rng, true));
        for (std::size_t j = 0; j < irr.size(); ++j) {
          row[j] = mult(rng);
          g = poly::mul(F, g, power(*ctx, irr[j], row[j]));
        }
        if (poly::degree<ExtField>(g) == 0) g = poly::mul(F, g, irr[0]), row[0] = 1;
        inputs.emplace_back(g, expo(rng));
      }
      unsigned expected_roots = 0;
      for (std::size_t j = 0; j < irr.size(); ++j) {
        if (k[0][j]) expected_roots += poly::degree<ExtField>(irr[j]);
      }
      CHECK(distinct_root_count(*ctx, inputs[0].first) == expected_roots);
      for (std::uint64_t e : {2u, 3u, 4u, 6u}) {
        bool expected = false;
        for (std::size_t j = 0; j < irr.size(); ++j) {
          expected = expected || (k[0][j] * inputs[0].second + k[1][j] * inputs[1].second) % e != 0;
        }
        CHECK(is_power_free(*ctx, inputs, e).power_free == expected);
      }
    }
  }
}

TEST_CASE("perfect powers in characteristic p are detected") {
  const auto ctx = FieldContext::build_q(2, 2);
  const ExtField F{ctx.get()};
  ExtPoly x_plus_1 = {ctx->one(), ctx->one()};
  const ExtPoly sq = poly::mul(F, x_plus_1, x_plus_1);  // x^2 + 1, derivative zero
  CHECK_FALSE(is_power_free(*ctx, {{sq, 1}}, 2).power_free);
  CHECK(is_power_free(*ctx, {{sq, 1}}, 3).power_free);
  CHECK(distinct_root_count(*ctx, sq) == 1);
}

TEST_CASE("certificate names a witnessing part") {
  const auto ctx = FieldContext::build_q(5, 2);
  const ExtPoly x = {ctx->zero(), ctx->one()};
  const ExtPoly x1 = {ctx->one(), ctx->one()};
  const auto cert = is_power_free(*ctx, {{x, 2}, {x1, 4}}, 4);
  CHECK(cert.power_free);
  CHECK_FALSE(cert.parts.empty());
  CHECK_FALSE(is_power_free(*ctx, {{x, 4}, {x1, 8}}, 4).power_free);
}

TEST_CASE("zero polynomial is rejected") {
  const auto ctx = FieldContext::build_q(3, 2);
  CHECK_THROWS_AS(power_free_basis(*ctx, {ExtPoly{}}), InputError);
}
