#pragma once

// Slow, independent reference implementations used as test oracles. Nothing
// here shares code with the library beyond basic field arithmetic.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ppair/characters.hpp"
#include "ppair/finite_field.hpp"
#include "ppair/hyperplane.hpp"

namespace oracle {

inline std::map<std::uint64_t, unsigned> trial_factor(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

inline int mobius(std::uint64_t n) {
  int sign = 1;
  for (auto [p, k] : trial_factor(n)) {
    if (k > 1) return 0;
    sign = -sign;
  }
  return sign;
}

/// Order by repeated multiplication.
inline std::uint64_t order(const ppair::FieldContext& ctx, const ppair::FieldElement& a) {
  ppair::FieldElement x = a;
  std::uint64_t k = 1;
  while (!(x == ctx.one())) {
    x = ctx.mul(x, a);
    ++k;
  }
  return k;
}

/// The primitive elements, as enumeration indices, from powers of a generator
/// whose order is verified by repeated multiplication.
inline std::set<std::uint64_t> primitive_indices(const ppair::FieldContext& ctx) {
  const std::uint64_t n = ctx.group_order();
  const ppair::FieldElement g = ctx.generator();
  if (order(ctx, g) != n) throw std::logic_error("generator has the wrong order");
  std::set<std::uint64_t> out;
  ppair::FieldElement x = ctx.one();
  for (std::uint64_t j = 0; j < n; ++j) {
    if (std::gcd(j, n) == 1) out.insert(ctx.index_of(x));
    x = ctx.mul(x, g);
  }
  return out;
}

/// Coordinates in an arbitrary basis by exhaustive search over F_q^m.
inline std::vector<std::uint32_t> coordinates_by_search(const ppair::FieldContext& ctx,
                                                        const std::vector<ppair::FieldElement>& basis,
                                                        const ppair::FieldElement& a) {
  const unsigned m = ctx.m();
  std::vector<std::uint32_t> coords(m, 0);
  for (;;) {
    ppair::FieldElement s = ctx.zero();
    for (unsigned i = 0; i < m; ++i) s = ctx.add(s, ctx.scalar_mul(coords[i], basis[i]));
    if (s == a) return coords;
    unsigned i = 0;
    while (i < m && ++coords[i] == ctx.q()) coords[i++] = 0;
    if (i == m) throw std::logic_error("not in the span");
  }
}

struct PairCounts {
  std::uint64_t proof = 0;
  std::uint64_t strict = 0;
  std::uint64_t zero_images = 0;
};

/// Walks the whole field in index order and filters S by coordinates.
inline PairCounts count_pairs(const ppair::FieldContext& ctx, const std::vector<std::uint32_t>& c,
                              const ppair::Quadratic& f) {
  const auto prim = primitive_indices(ctx);
  auto in_s = [&](const ppair::FieldElement& a) {
    const auto coeffs = ctx.coefficients(a);
    for (unsigned j = 0; j < ctx.m(); ++j) {
      if (coeffs[j] == c[j]) return false;
    }
    return true;
  };
  PairCounts out;
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    const auto a = ctx.element_at(i);
    if (!in_s(a) || ctx.is_zero(a)) continue;
    const auto y = ppair::evaluate(ctx, f, a);
    if (ctx.is_zero(y)) {
      ++out.zero_images;
      continue;
    }
    if (!prim.count(i) || !prim.count(ctx.index_of(y))) continue;
    ++out.proof;
    out.strict += in_s(y);
  }
  return out;
}

inline ppair::FieldElement random_element(const ppair::FieldContext& ctx, std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, ctx.size() - 1);
  return ctx.element_at(d(rng));
}

inline ppair::Quadratic random_quadratic(const ppair::FieldContext& ctx, std::mt19937_64& rng) {
  for (;;) {
    ppair::Quadratic f{random_element(ctx, rng, true), random_element(ctx, rng), random_element(ctx, rng)};
    if (ppair::is_valid_quadratic(ctx, f)) return f;
  }
}

inline std::vector<std::uint32_t> random_constants(const ppair::FieldContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(ctx.q() - 1));
  std::vector<std::uint32_t> c(ctx.m());
  for (auto& x : c) x = d(rng);
  return c;
}

}  // namespace oracle
