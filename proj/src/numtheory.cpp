#include <algorithm>
#include <sstream>

#include "ppair/bigfloat.hpp"
#include "ppair/error.hpp"
#include "ppair/numtheory.hpp"

namespace ppair {

std::vector<BigInt> Factorization::primes() const {
  std::vector<BigInt> out;
  out.reserve(factors.size());
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

BigInt Factorization::radical() const {
  BigInt r = 1;
  for (const auto& pp : factors) r *= pp.prime;
  return r;
}

BigInt Factorization::reconstruct() const {
  BigInt r = 1;
  for (const auto& pp : factors) r *= ipow(pp.prime, pp.exponent);
  return r;
}

std::string Factorization::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " * ";
    os << factors[i].prime.get_str();
    if (factors[i].exponent > 1) os << "^" << factors[i].exponent;
  }
  return os.str();
}

int mobius(const Factorization& f) {
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors.size() % 2 ? -1 : 1;
}

BigInt euler_phi(const Factorization& f) {
  BigInt r = 1;
  for (const auto& pp : f.factors) r *= ipow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  return r;
}

Rational theta(const Factorization& f) {
  Rational r = 1;
  for (const auto& pp : f.factors) r *= Rational(pp.prime - 1, pp.prime);
  r.canonicalize();
  return r;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw InputError("mobius: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

std::uint64_t euler_phi(std::uint64_t n) { return to_u64(euler_phi(factorize(n))); }

Rational theta(std::uint64_t n) { return theta(factorize(n)); }

std::uint64_t squarefree_divisor_count(std::uint64_t n) {
  return std::uint64_t{1} << factorize(n).distinct_primes();
}

BigInt squarefree_divisor_count(const Factorization& f) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, f.distinct_primes());
  return r;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : f.factors) {
    const std::uint64_t p = to_u64(pp.prime);
    const std::size_t n = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= p;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> squarefree_divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : f.factors) {
    const std::uint64_t p = to_u64(pp.prime);
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Returns W < n^(0.96/lnln n); `close` reports a near tie at this precision.
bool decide_w_bound(std::uint64_t n, std::uint64_t w, mpfr_prec_t bits, bool& close) {
  const BigFloat N(bits, BigInt(std::to_string(n)));
  const BigFloat ln = log(N);
  const BigFloat exponent = BigFloat(bits, Rational(24, 25)) * ln / log(ln);
  const BigFloat rhs = exp(exponent);
  const BigFloat lhs(bits, BigInt(std::to_string(w)));
  const BigFloat tol = BigFloat(bits, Rational(1, BigInt("1000000000000000000000000000000"))) * rhs;
  close = abs(lhs - rhs) <= tol;
  return lhs < rhs;
}

}  // namespace

bool w_bound_holds(std::uint64_t n, std::uint64_t w_of_n_minus_1) {
  if (n < 3) throw InputError("w_bound_holds: n must be at least 3");
  bool close = false;
  const bool verdict = decide_w_bound(n, w_of_n_minus_1, 200, close);
  if (!close) return verdict;
  return decide_w_bound(n, w_of_n_minus_1, 400, close);
}

bool w_bound_holds(std::uint64_t n) {
  if (n < 3) throw InputError("w_bound_holds: n must be at least 3");
  return w_bound_holds(n, squarefree_divisor_count(n - 1));
}

}  // namespace ppair
