#pragma once

// m F_q-affine hyperplanes A_j = { sum a_i b_i : a_j = c_j } of F_{q^m} for an
// F_q-basis b_1..b_m, and the avoiding set S = F_{q^m} minus their union.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppair/error.hpp"
#include "ppair/finite_field.hpp"

namespace ppair {

using Coordinates = std::vector<std::uint32_t>;

class HyperplaneSystem {
 public:
  /// Default enumeration budget for avoiding-set and hyperplane walks.
  static constexpr std::uint64_t kDefaultBudget = 100'000'000;

  /// basis defaults to the polynomial basis 1, x, ..., x^(m-1).
  /// Throws InputError if |constants| != m, a constant is not in F_q, or the
  /// basis is not F_q-independent (the message carries the rank).
  HyperplaneSystem(FieldPtr ctx, Coordinates constants, std::optional<std::vector<FieldElement>> basis = std::nullopt);

  const FieldContext& field() const { return *ctx_; }
  const FieldPtr& field_ptr() const { return ctx_; }
  unsigned m() const { return ctx_->m(); }
  const std::vector<FieldElement>& basis() const { return basis_; }
  const Coordinates& constants() const { return constants_; }
  bool polynomial_basis() const { return polynomial_basis_; }

  /// (a_1..a_m) with sum a_i b_i = a.
  Coordinates coordinates(const FieldElement& a) const;
  FieldElement combine(const Coordinates& coords) const;

  bool in_avoiding_set(const FieldElement& a) const;
  /// j is 0-based.
  bool in_hyperplane(const FieldElement& a, unsigned j) const;

  /// (q-1)^m
  std::uint64_t avoiding_size() const;

  /// Values a_1 may take inside S, ascending: the enumeration blocks.
  std::vector<std::uint32_t> first_coordinate_values() const;

  /// Visits S in lexicographic coordinate order (a_1 most significant),
  /// without touching any element outside S. BudgetError if |S| > budget.
  template <class Fn>
  void for_each_avoiding(Fn&& fn, std::uint64_t budget = kDefaultBudget) const {
    if (avoiding_size() > budget) throw BudgetError("avoiding set has " + std::to_string(avoiding_size()) + " elements, budget " + std::to_string(budget));
    odometer(avoiding_values(), fn);
  }

  /// The part of S with a_1 = first (first != c_1).
  template <class Fn>
  void for_each_avoiding_block(std::uint32_t first, Fn&& fn) const {
    auto values = avoiding_values();
    if (first >= ctx_->q() || first == constants_[0]) throw InputError("block value lies on the first hyperplane");
    values[0] = {first};
    odometer(values, fn);
  }

  /// Visits the intersection of A_j over the 0-based indices in J.
  template <class Fn>
  void for_each_in_intersection(const std::vector<unsigned>& J, Fn&& fn, std::uint64_t budget = kDefaultBudget) const {
    std::vector<std::vector<std::uint32_t>> values(m());
    std::vector<bool> fixed(m(), false);
    for (unsigned j : J) {
      if (j >= m()) throw InputError("hyperplane index out of range");
      fixed[j] = true;
    }
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m(); ++i) {
      if (fixed[i]) {
        values[i] = {constants_[i]};
      } else {
        for (std::uint32_t v = 0; v < ctx_->q(); ++v) values[i].push_back(v);
        count *= ctx_->q();
      }
    }
    if (count > budget) throw BudgetError("intersection has " + std::to_string(count) + " elements, budget " + std::to_string(budget));
    odometer(values, fn);
  }

  std::vector<FieldElement> enumerate_avoiding(std::uint64_t budget = kDefaultBudget) const;

  std::string describe() const;

 private:
  std::vector<std::vector<std::uint32_t>> avoiding_values() const;

  template <class Fn>
  void odometer(const std::vector<std::vector<std::uint32_t>>& values, Fn& fn) const {
    const unsigned m = this->m();
    for (const auto& v : values) {
      if (v.empty()) return;
    }
    std::vector<std::size_t> pos(m, 0);
    Coordinates a(m);
    for (unsigned i = 0; i < m; ++i) a[i] = values[i][0];
    FieldElement cur = combine(a);
    const BaseField& fq = ctx_->base();
    auto set_digit = [&](unsigned i, std::uint32_t value) {
      if (polynomial_basis_) {
        cur.c[i] = value;
      } else {
        const std::uint32_t delta = fq.sub(value, a[i]);
        cur = ctx_->add(cur, ctx_->scalar_mul(delta, basis_[i]));
      }
      a[i] = value;
    };
    for (;;) {
      fn(static_cast<const FieldElement&>(cur));
      int i = static_cast<int>(m) - 1;
      for (; i >= 0; --i) {
        if (++pos[i] < values[i].size()) {
          set_digit(static_cast<unsigned>(i), values[i][pos[i]]);
          break;
        }
        pos[i] = 0;
        set_digit(static_cast<unsigned>(i), values[i][0]);
      }
      if (i < 0) return;
    }
  }

  FieldPtr ctx_;
  Coordinates constants_;
  std::vector<FieldElement> basis_;
  bool polynomial_basis_ = true;
  // inverse_[i][r]: coordinate i as a linear form in the coefficients c_r.
  std::vector<std::vector<std::uint32_t>> inverse_;
};

/// Rank over F_q of the coefficient vectors of the given elements.
unsigned rank_over_base(const FieldContext& ctx, const std::vector<FieldElement>& elements);

}  // namespace ppair
