#pragma once

// Exact integer number theory: factorization of q^m - 1 and the arithmetic
// functions (Moebius, Euler phi, theta = phi(n)/n, squarefree divisor count)
// that weight the character-sum expansions.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ppair {

using BigInt = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
};

/// n = prod prime^exponent, primes strictly increasing.
///
/// `all_proven` is false when some prime is above the deterministic
/// Miller-Rabin range (3.3e24) and was only accepted after 64 random rounds.
struct Factorization {
  BigInt n;
  std::vector<PrimePower> factors;
  bool all_proven = true;

  std::size_t distinct_primes() const { return factors.size(); }
  std::vector<BigInt> primes() const;
  BigInt radical() const;
  BigInt reconstruct() const;
  std::string to_string() const;
};

struct PrimalityVerdict {
  bool prime = false;
  bool proven = false;
};

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

/// Miller-Rabin with the first 13 prime bases (deterministic below
/// 3.317e24), otherwise 64 rounds with a fixed-seed base sequence.
PrimalityVerdict test_primality(const BigInt& n);
bool is_prime(std::uint64_t n);

Factorization factorize(const BigInt& n);
Factorization factorize(std::uint64_t n);

struct CyclotomicPart {
  unsigned d = 0;
  BigInt value;  // Phi_d(q)
};

/// q^m - 1 = prod_{d | m} Phi_d(q), one entry per divisor d of m in
/// increasing order.
std::vector<CyclotomicPart> cyclotomic_split(std::uint64_t q, unsigned m);

/// Factorization of q^m - 1, factoring each cyclotomic part separately.
Factorization factorize_power_minus_one(std::uint64_t q, unsigned m);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
Rational theta(std::uint64_t n);

int mobius(const Factorization& f);
BigInt euler_phi(const Factorization& f);
Rational theta(const Factorization& f);

/// W(n) = 2^omega(n).
std::uint64_t squarefree_divisor_count(std::uint64_t n);
BigInt squarefree_divisor_count(const Factorization& f);

/// All positive divisors (or only the squarefree ones) of a factored
/// integer that fits in 64 bits, in increasing order.
std::vector<std::uint64_t> divisors(const Factorization& f);
std::vector<std::uint64_t> squarefree_divisors(const Factorization& f);

/// W(n-1) < n^(0.96 / log log n), natural logarithms, decided at 200 bits
/// and re-decided at 400 bits when the two sides agree to 1e-30.
bool w_bound_holds(std::uint64_t n);

/// Same test with W(n-1) supplied by the caller (used by range scans that
/// sieve omega instead of factoring each n).
bool w_bound_holds(std::uint64_t n, std::uint64_t w_of_n_minus_1);

BigInt ipow(const BigInt& base, unsigned long exponent);
std::uint64_t to_u64(const BigInt& n);  // throws InputError when n does not fit
bool is_prime_power(std::uint64_t q, std::uint64_t* prime = nullptr, unsigned* exponent = nullptr);

}  // namespace ppair
