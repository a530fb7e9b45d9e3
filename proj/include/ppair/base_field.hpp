#pragma once

// The prime field F_p and the base field F_q = F_p[y]/(g), q = p^k.
//
// F_q elements are indices sum d_j p^j of their coefficient vectors
// (d_0 + d_1 y + ... + d_{k-1} y^{k-1}), so 0 and 1 are the usual zero and one.

#include <cstdint>
#include <string>
#include <vector>

namespace ppair {

/// F_p as a polynomial-coefficient adaptor.
struct PrimeField {
  using Elem = std::uint32_t;
  std::uint64_t p = 2;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p - b) % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(p - a); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p); }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::uint64_t characteristic() const { return p; }
  std::uint64_t order() const { return p; }
  Elem pth_root(Elem a) const { return a; }
};

class BaseField {
 public:
  using Elem = std::uint32_t;

  /// Largest supported q. Keeps the log/exp tables small.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Throws InputError unless p is prime, k >= 1 and p^k <= kMaxOrder.
  BaseField(std::uint64_t p, unsigned k);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }

  /// Monic irreducible g of degree k over F_p, lowest degree first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return q_; }
  Elem pth_root(Elem a) const { return pow(a, q_ / p_); }

  /// Image of the integer n under Z -> F_p -> F_q.
  Elem from_integer(std::int64_t n) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  std::string to_string(Elem a) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;  // k > 1 only
  std::vector<Elem> exp_;           // doubled length so log sums need no reduction
};

}  // namespace ppair
