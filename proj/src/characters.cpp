#include "ppair/characters.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ppair/error.hpp"
#include "ppair/numtheory.hpp"

namespace ppair {

namespace {

const std::vector<std::uint32_t>& checked_logs(const FieldPtr& ctx) {
  if (!ctx->has_log_table()) {
    throw BudgetError("characters need q^m <= 2^24 (got " + std::to_string(ctx->size()) + ")");
  }
  return ctx->log_table();
}

// Squarefree divisors d of e with integer weights n_d = mu(d) * L / phi(d),
// L = lcm of the phi(d). mu(d)/phi(d) = n_d / L exactly.
struct DivisorWeights {
  std::vector<std::uint64_t> divisors;
  std::vector<std::int64_t> numerators;
  std::uint64_t denominator = 1;
  Rational theta;
};

DivisorWeights divisor_weights(std::uint64_t e) {
  DivisorWeights w;
  const Factorization fe = factorize(e);
  w.theta = theta(fe);
  w.divisors = squarefree_divisors(fe);
  std::vector<std::uint64_t> phis;
  for (std::uint64_t d : w.divisors) {
    phis.push_back(euler_phi(d));
    w.denominator = std::lcm(w.denominator, phis.back());
  }
  for (std::size_t i = 0; i < w.divisors.size(); ++i) {
    const auto n = static_cast<std::int64_t>(w.denominator / phis[i]);
    w.numerators.push_back(mobius(w.divisors[i]) * n);
  }
  return w;
}

// table[r] = sum over characters of exact order d of chi(g^j), j = r mod d.
std::vector<Complex> order_sum_table(const CharacterGroup& group, std::uint64_t d) {
  const std::uint64_t step = group.N() / d;
  std::vector<Complex> table(d);
  for (std::uint64_t r = 0; r < d; ++r) {
    ComplexSum acc;
    for (std::uint64_t s = 0; s < d; ++s) {
      if (std::gcd(s, d) != 1) continue;
      acc.add(group.root(step * ((s * r) % d)));
    }
    table[r] = acc.value();
  }
  return table;
}

Complex order_sum(const CharacterGroup& group, std::uint64_t d, std::uint64_t j) {
  const std::uint64_t step = group.N() / d;
  ComplexSum acc;
  for (std::uint64_t s = 0; s < d; ++s) {
    if (std::gcd(s, d) != 1) continue;
    acc.add(group.root(step * ((s * (j % d)) % d)));
  }
  return acc.value();
}

void require_divisor(const CharacterGroup& group, std::uint64_t e) {
  if (e == 0 || group.N() % e) throw InputError(std::to_string(e) + " does not divide q^m - 1 = " + std::to_string(group.N()));
}

double to_double(const Rational& r) { return r.get_d(); }

std::string element_str(const FieldContext& ctx, const FieldElement& a) {
  for (unsigned i = 1; i < ctx.m(); ++i) {
    if (a.c[i]) return ctx.to_string(a);
  }
  return ctx.base().to_string(a.c[0]);
}

}  // namespace

CharacterGroup::CharacterGroup(FieldPtr ctx)
    : ctx_(std::move(ctx)), n_(ctx_->group_order()), logs_(checked_logs(ctx_)) {
  roots_.resize(n_);
  const long double two_pi = 2.0L * 3.141592653589793238462643383279502884L;
  for (std::uint64_t j = 0; j < n_; ++j) {
    const long double angle = two_pi * static_cast<long double>(j) / static_cast<long double>(n_);
    roots_[j] = Complex(static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle)));
  }
}

std::uint64_t Character::order() const { return N / std::gcd(N, exponent % N); }

Character make_character(const CharacterGroup& group, std::uint64_t t) {
  if (t >= group.N()) throw InputError("character exponent must be below q^m - 1");
  return {t, group.N()};
}

Complex char_eval(const CharacterGroup& group, const Character& chi, const FieldElement& a) {
  const std::uint32_t l = group.log(a);
  if (l == FieldContext::kNoLog) return {0.0, 0.0};
  const auto idx = static_cast<std::uint64_t>(static_cast<unsigned __int128>(chi.exponent) * l % group.N());
  return group.root(idx);
}

void validate_quadratic(const FieldContext& ctx, const Quadratic& f) {
  if (ctx.is_zero(f.a)) throw InputError("invalid quadratic: leading coefficient a = 0");
  const FieldElement four_ac = ctx.scalar_mul(ctx.base().from_integer(4), ctx.mul(f.a, f.c));
  if (ctx.mul(f.b, f.b) == four_ac) throw InputError("invalid quadratic: b^2 = 4ac");
}

bool is_valid_quadratic(const FieldContext& ctx, const Quadratic& f) {
  try {
    validate_quadratic(ctx, f);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

Quadratic default_quadratic(const FieldContext& ctx) {
  Quadratic f{ctx.one(), ctx.one(), ctx.zero()};
  for (std::uint64_t idx = 1; idx < ctx.size(); ++idx) {
    f.c = ctx.element_at(idx);
    if (is_valid_quadratic(ctx, f)) return f;
  }
  throw std::logic_error("no valid default quadratic");
}

FieldElement evaluate(const FieldContext& ctx, const Quadratic& f, const FieldElement& x) {
  return ctx.add(ctx.mul(ctx.add(ctx.mul(f.a, x), f.b), x), f.c);
}

ExtPoly to_poly(const Quadratic& f) { return {f.c, f.b, f.a}; }

std::string to_string(const FieldContext& ctx, const Quadratic& f) {
  std::ostringstream os;
  os << element_str(ctx, f.a) << "*x^2 + " << element_str(ctx, f.b) << "*x + " << element_str(ctx, f.c);
  return os.str();
}

double rho_efree(const CharacterGroup& group, const FieldElement& a, std::uint64_t e) {
  require_divisor(group, e);
  const std::uint32_t j = group.log(a);
  if (j == FieldContext::kNoLog) throw InputError("characteristic function is undefined at 0");
  const DivisorWeights w = divisor_weights(e);
  ComplexSum acc;
  for (std::size_t i = 0; i < w.divisors.size(); ++i) {
    acc.add(static_cast<double>(w.numerators[i]) * order_sum(group, w.divisors[i], j));
  }
  return to_double(w.theta) * acc.value().real() / static_cast<double>(w.denominator);
}

double gamma_primitive(const CharacterGroup& group, const FieldElement& a) { return rho_efree(group, a, group.N()); }

double count_primitive_formula(const CharacterGroup& group, const std::vector<FieldElement>& elements) {
  const DivisorWeights w = divisor_weights(group.N());
  std::vector<std::vector<Complex>> tables;
  for (std::uint64_t d : w.divisors) tables.push_back(order_sum_table(group, d));
  ComplexSum acc;
  for (const auto& a : elements) {
    const std::uint32_t j = group.log(a);
    if (j == FieldContext::kNoLog) continue;
    for (std::size_t i = 0; i < w.divisors.size(); ++i) {
      acc.add(static_cast<double>(w.numerators[i]) * tables[i][j % w.divisors[i]]);
    }
  }
  return to_double(w.theta) * acc.value().real() / static_cast<double>(w.denominator);
}

FormulaCount count_pairs_formula(const CharacterGroup& group, const HyperplaneSystem& sys, const Quadratic& f,
                                 std::uint64_t d1, std::uint64_t d2) {
  require_divisor(group, d1);
  require_divisor(group, d2);
  const FieldContext& ctx = group.field();
  validate_quadratic(ctx, f);

  FormulaCount out;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> logs;
  sys.for_each_avoiding([&](const FieldElement& lambda) {
    const FieldElement y = evaluate(ctx, f, lambda);
    if (ctx.is_zero(y)) ++out.zero_images;
    const std::uint32_t l1 = group.log(lambda);
    const std::uint32_t l2 = group.log(y);
    if (l1 != FieldContext::kNoLog && l2 != FieldContext::kNoLog) logs.emplace_back(l1, l2);
  });

  const DivisorWeights w1 = divisor_weights(d1);
  const DivisorWeights w2 = divisor_weights(d2);
  std::vector<std::vector<Complex>> t1, t2;
  for (std::uint64_t e : w1.divisors) t1.push_back(order_sum_table(group, e));
  for (std::uint64_t e : w2.divisors) t2.push_back(order_sum_table(group, e));

  ComplexSum total;
  for (std::size_t i = 0; i < w1.divisors.size(); ++i) {
    const std::uint64_t e1 = w1.divisors[i];
    for (std::size_t k = 0; k < w2.divisors.size(); ++k) {
      const std::uint64_t e2 = w2.divisors[k];
      ComplexSum block;
      for (const auto& [l1, l2] : logs) block.add(t1[i][l1 % e1] * t2[k][l2 % e2]);
      total.add(static_cast<double>(w1.numerators[i] * w2.numerators[k]) * block.value());
    }
  }
  const double scale = to_double(w1.theta * w2.theta) /
                       (static_cast<double>(w1.denominator) * static_cast<double>(w2.denominator));
  out.value = scale * total.value().real();
  out.imag = scale * total.value().imag();
  out.rounded = static_cast<std::int64_t>(std::llround(out.value));
  out.residual = std::abs(out.value - static_cast<double>(out.rounded));
  return out;
}

}  // namespace ppair
