#pragma once

// F_{q^m} = F_q[x]/(h) on top of BaseField. Contexts are immutable once built
// and shared through shared_ptr<const FieldContext>.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ppair/base_field.hpp"
#include "ppair/numtheory.hpp"

namespace ppair {

inline constexpr unsigned kMaxExtDegree = 40;

/// Coefficients c_0..c_{m-1} over F_q (entries past m are always zero).
struct FieldElement {
  std::array<std::uint32_t, kMaxExtDegree> c{};

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c == b.c; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
};

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

class FieldContext {
 public:
  /// q^m above this is refused: discrete logs fall back to baby-step
  /// giant-step whose table would no longer fit comfortably in memory.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 40;
  static constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 24;

  /// Errors: InputError for non-prime p, k = 0 or m < 2; BudgetError when
  /// q > 2^20 or q^m > kMaxOrder.
  static FieldPtr build(std::uint64_t p, unsigned k, unsigned m);
  /// Same, from q = p^k.
  static FieldPtr build_q(std::uint64_t q, unsigned m);

  const BaseField& base() const { return base_; }
  std::uint64_t p() const { return base_.p(); }
  unsigned k() const { return base_.k(); }
  std::uint64_t q() const { return base_.q(); }
  unsigned m() const { return m_; }
  /// q^m
  std::uint64_t size() const { return size_; }
  /// N = q^m - 1
  std::uint64_t group_order() const { return size_ - 1; }
  const Factorization& order_factorization() const { return order_factorization_; }
  const std::vector<std::uint64_t>& order_primes() const { return primes_; }
  /// N / p_i for each prime p_i | N, same order as order_primes().
  const std::vector<std::uint64_t>& cofactors() const { return cofactors_; }
  /// Monic h of degree m over F_q, lowest degree first.
  const std::vector<std::uint32_t>& ext_modulus() const { return ext_modulus_; }
  const FieldElement& generator() const { return generator_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return from_base(1); }
  FieldElement from_base(std::uint32_t c) const;
  FieldElement x() const;
  /// Throws InputError unless coeffs has at most m entries, each < q.
  FieldElement from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coefficients(const FieldElement& a) const;

  bool is_zero(const FieldElement& a) const { return a == FieldElement{}; }
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scalar_mul(std::uint32_t s, const FieldElement& a) const;
  FieldElement square(const FieldElement& a) const { return mul(a, a); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// Throws InputError on zero.
  FieldElement inv(const FieldElement& a) const;

  /// Enumeration index sum c_i q^i, with c_{m-1} most significant.
  std::uint64_t index_of(const FieldElement& a) const;
  FieldElement element_at(std::uint64_t index) const;

  /// Multiplicative order; throws InputError on zero.
  std::uint64_t element_order(const FieldElement& a) const;
  bool is_primitive(const FieldElement& a) const;
  /// For each prime r | e: a^(N/r) != 1. Throws InputError if e does not
  /// divide N or a = 0.
  bool is_efree(const FieldElement& a, std::uint64_t e) const;
  /// First primitive element in enumeration order.
  FieldElement find_generator() const;

  /// generator^result = a, result in [0, N). Throws InputError on zero.
  std::uint64_t discrete_log(const FieldElement& a) const;
  bool has_log_table() const { return size_ <= kLogTableLimit; }
  /// Log of the element with enumeration index idx; kNoLog for idx = 0.
  /// Only valid when has_log_table().
  static constexpr std::uint32_t kNoLog = 0xffffffffu;
  const std::vector<std::uint32_t>& log_table() const;

  std::string to_string(const FieldElement& a) const;
  /// Canonical text form: p, k, m, both moduli and the generator.
  std::string summary() const;

 private:
  FieldContext(std::uint64_t p, unsigned k, unsigned m);
  void build_log_table() const;
  std::uint64_t bsgs_log(const FieldElement& a) const;

  BaseField base_;
  unsigned m_;
  std::uint64_t size_;
  std::vector<std::uint64_t> qpow_;
  std::vector<std::uint32_t> ext_modulus_;
  std::vector<std::uint32_t> neg_tail_;  // -h_0 .. -h_{m-1}
  Factorization order_factorization_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> cofactors_;
  FieldElement generator_;

  mutable std::once_flag log_once_;
  mutable std::vector<std::uint32_t> log_table_;
};

/// F_{q^m} as a coefficient field for ppair::poly.
struct ExtField {
  using Elem = FieldElement;
  const FieldContext* ctx;

  Elem zero() const { return ctx->zero(); }
  Elem one() const { return ctx->one(); }
  Elem add(const Elem& a, const Elem& b) const { return ctx->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return ctx->sub(a, b); }
  Elem neg(const Elem& a) const { return ctx->neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return ctx->mul(a, b); }
  Elem inv(const Elem& a) const { return ctx->inv(a); }
  bool is_zero(const Elem& a) const { return ctx->is_zero(a); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::uint64_t characteristic() const { return ctx->p(); }
  std::uint64_t order() const { return ctx->size(); }
  Elem pth_root(const Elem& a) const { return ctx->pow(a, ctx->size() / ctx->p()); }
};

}  // namespace ppair
