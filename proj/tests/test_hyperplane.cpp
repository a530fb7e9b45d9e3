#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ppair/error.hpp"
#include "ppair/hyperplane.hpp"

using namespace ppair;

namespace {

std::vector<FieldElement> random_basis(const FieldContext& ctx, std::mt19937_64& rng) {
  for (;;) {
    std::vector<FieldElement> b;
    for (unsigned i = 0; i < ctx.m(); ++i) b.push_back(oracle::random_element(ctx, rng));
    if (rank_over_base(ctx, b) == ctx.m()) return b;
  }
}

}  // namespace

TEST_CASE("avoiding set of F_9 with zero constants") {
  const HyperplaneSystem sys(FieldContext::build_q(3, 2), {0, 0});
  const auto s = sys.enumerate_avoiding();
  REQUIRE(s.size() == 4);
  // lexicographic with a_1 most significant: (1,1), (1,2), (2,1), (2,2)
  CHECK(sys.coordinates(s[0]) == Coordinates{1, 1});
  CHECK(sys.coordinates(s[1]) == Coordinates{1, 2});
  CHECK(sys.coordinates(s[2]) == Coordinates{2, 1});
  CHECK(sys.coordinates(s[3]) == Coordinates{2, 2});
}

TEST_CASE("coordinates in a custom basis agree with exhaustive search") {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {4, 2}, {2, 4}, {5, 2}}) {
    const auto ctx = FieldContext::build_q(q, m);
    std::mt19937_64 rng(q * 31 + m);
    for (int trial = 0; trial < 5; ++trial) {
      const auto basis = random_basis(*ctx, rng);
      const HyperplaneSystem sys(ctx, Coordinates(m, 0), basis);
      for (std::uint64_t i = 0; i < ctx->size(); ++i) {
        const auto a = ctx->element_at(i);
        const auto coords = sys.coordinates(a);
        CHECK(coords == oracle::coordinates_by_search(*ctx, basis, a));
        CHECK(sys.combine(coords) == a);
      }
    }
  }
}

TEST_CASE("enumeration visits exactly the avoiding set") {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 3}, {4, 2}, {7, 2}, {2, 5}}) {
    const auto ctx = FieldContext::build_q(q, m);
    std::mt19937_64 rng(q + 13 * m);
    for (int trial = 0; trial < 4; ++trial) {
      const auto c = oracle::random_constants(*ctx, rng);
      const std::optional<std::vector<FieldElement>> basis =
          trial % 2 ? std::optional(random_basis(*ctx, rng)) : std::nullopt;
      const HyperplaneSystem sys(ctx, c, basis);
      std::set<std::uint64_t> seen;
      Coordinates prev;
      sys.for_each_avoiding([&](const FieldElement& a) {
        CHECK(seen.insert(ctx->index_of(a)).second);
        const auto coords = sys.coordinates(a);
        if (!prev.empty()) CHECK(prev < coords);
        prev = coords;
      });
      std::set<std::uint64_t> expected;
      for (std::uint64_t i = 0; i < ctx->size(); ++i) {
        const auto coords = basis ? oracle::coordinates_by_search(*ctx, *basis, ctx->element_at(i))
                                  : ctx->coefficients(ctx->element_at(i));
        bool avoid = true;
        for (unsigned j = 0; j < m; ++j) avoid = avoid && coords[j] != c[j];
        if (avoid) expected.insert(i);
        CHECK(sys.in_avoiding_set(ctx->element_at(i)) == avoid);
      }
      CHECK(seen == expected);
      CHECK(seen.size() == sys.avoiding_size());
    }
  }
}

TEST_CASE("blocks partition the avoiding set") {
  const auto ctx = FieldContext::build_q(5, 3);
  const HyperplaneSystem sys(ctx, {2, 0, 4});
  std::vector<std::uint64_t> whole, blocks;
  sys.for_each_avoiding([&](const FieldElement& a) { whole.push_back(ctx->index_of(a)); });
  for (std::uint32_t v : sys.first_coordinate_values()) {
    sys.for_each_avoiding_block(v, [&](const FieldElement& a) { blocks.push_back(ctx->index_of(a)); });
  }
  CHECK(whole == blocks);
  CHECK(sys.first_coordinate_values() == std::vector<std::uint32_t>{0, 1, 3, 4});
  CHECK_THROWS_AS(sys.for_each_avoiding_block(2, [](const FieldElement&) {}), InputError);
}

TEST_CASE("intersections of hyperplanes have q^(m - |J|) elements") {
  const auto ctx = FieldContext::build_q(3, 3);
  const HyperplaneSystem sys(ctx, {1, 2, 0});
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<unsigned> J;
    for (unsigned j = 0; j < 3; ++j) {
      if (mask >> j & 1) J.push_back(j);
    }
    std::uint64_t count = 0;
    sys.for_each_in_intersection(J, [&](const FieldElement& a) {
      ++count;
      for (unsigned j : J) CHECK(sys.in_hyperplane(a, j));
    });
    std::uint64_t expected = 1;
    for (std::size_t i = J.size(); i < 3; ++i) expected *= 3;
    CHECK(count == expected);
  }
}

TEST_CASE("invalid systems are rejected") {
  const auto ctx = FieldContext::build_q(3, 2);
  CHECK_THROWS_AS(HyperplaneSystem(ctx, {0}), InputError);
  CHECK_THROWS_AS(HyperplaneSystem(ctx, {0, 3}), InputError);
  const std::vector<FieldElement> dependent = {ctx->one(), ctx->from_base(2)};
  try {
    HyperplaneSystem sys(ctx, {0, 0}, dependent);
    FAIL("dependent basis accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("rank 1") != std::string::npos);
  }
}

TEST_CASE("budget guards the walk") {
  const HyperplaneSystem sys(FieldContext::build_q(5, 4), {0, 0, 0, 0});
  CHECK_THROWS_AS(sys.for_each_avoiding([](const FieldElement&) {}, 100), BudgetError);
}
