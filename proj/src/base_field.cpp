#include "ppair/base_field.hpp"

#include <sstream>

#include "ppair/error.hpp"
#include "ppair/numtheory.hpp"
#include "ppair/polynomial.hpp"

namespace ppair {

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw InputError("inverse of zero in F_p");
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Elem>(r);
}

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint64_t index, std::uint64_t p, unsigned k) {
  Digits d(k);
  for (unsigned j = 0; j < k; ++j) {
    d[j] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return d;
}

std::uint64_t from_digits(const Digits& d, std::uint64_t p) {
  std::uint64_t index = 0;
  for (std::size_t j = d.size(); j-- > 0;) index = index * p + d[j];
  return index;
}

// Product of two residues modulo the monic g, as digit vectors of length k.
Digits mul_mod_g(const Digits& a, const Digits& b, const Digits& g, std::uint64_t p) {
  const std::size_t k = a.size();
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t i = prod.size(); i-- > k;) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    // y^i = y^(i-k) * y^k and y^k = -(g_0 + ... + g_{k-1} y^{k-1})
    for (std::size_t j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - g[j]) * c) % p;
    prod[i] = 0;
  }
  Digits out(k);
  for (std::size_t j = 0; j < k; ++j) out[j] = static_cast<std::uint32_t>(prod[j]);
  return out;
}

Digits pow_mod_g(Digits base, std::uint64_t e, const Digits& g, std::uint64_t p) {
  Digits r(base.size(), 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = mul_mod_g(r, base, g, p);
    base = mul_mod_g(base, base, g, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

BaseField::BaseField(std::uint64_t p, unsigned k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InputError("base field degree k must be positive");
  for (unsigned i = 0; i < k; ++i) {
    if (q_ > kMaxOrder / p) throw BudgetError("base field order p^k exceeds 2^20");
    q_ *= p;
  }
  if (k == 1) {
    modulus_ = {0, 1};
    return;
  }

  const PrimeField fp{p};
  for (std::uint64_t index = 0; index < q_; ++index) {
    std::vector<std::uint32_t> cand = to_digits(index, p, k);
    cand.push_back(1);
    if (poly::is_irreducible(fp, cand)) {
      modulus_ = cand;
      break;
    }
  }

  // Enumeration-first primitive element of F_q, then log/exp tables.
  const Factorization qm1 = factorize(q_ - 1);
  const Digits g(modulus_.begin(), modulus_.end() - 1);
  Digits gen;
  for (std::uint64_t index = 2; index < q_ && gen.empty(); ++index) {
    const Digits cand = to_digits(index, p, k);
    bool primitive = true;
    for (const auto& pp : qm1.factors) {
      const Digits t = pow_mod_g(cand, (q_ - 1) / to_u64(pp.prime), g, p);
      if (from_digits(t, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = cand;
  }

  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  Digits cur(k, 0);
  cur[0] = 1;
  for (std::uint64_t j = 0; j < q_ - 1; ++j) {
    const auto idx = static_cast<std::uint32_t>(from_digits(cur, p));
    exp_[j] = exp_[j + q_ - 1] = idx;
    log_[idx] = static_cast<std::uint32_t>(j);
    cur = mul_mod_g(cur, gen, g, p);
  }
}

BaseField::Elem BaseField::add(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p_);
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0, scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a = static_cast<Elem>(a / p_);
    b = static_cast<Elem>(b / p_);
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

BaseField::Elem BaseField::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : static_cast<Elem>(p_ - a);
  if (p_ == 2) return a;
  std::uint64_t out = 0, scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    out += ((p_ - a % p_) % p_) * scale;
    a = static_cast<Elem>(a / p_);
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

BaseField::Elem BaseField::inv(Elem a) const {
  if (a == 0) throw InputError("inverse of zero in F_q");
  if (k_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

BaseField::Elem BaseField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (k_ == 1) {
    std::uint64_t r = 1, b = a;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<Elem>(r);
  }
  const auto l = static_cast<unsigned __int128>(log_[a]) * e % (q_ - 1);
  return exp_[static_cast<std::size_t>(l)];
}

BaseField::Elem BaseField::from_integer(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Elem>(((n % p) + p) % p);
}

std::vector<std::uint32_t> BaseField::digits(Elem a) const { return to_digits(a, p_, k_); }

std::string BaseField::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = d.size(); j-- > 0;) {
    if (!d[j]) continue;
    if (!first) os << "+";
    first = false;
    if (j == 0) {
      os << d[j];
    } else {
      if (d[j] != 1) os << d[j] << "*";
      os << "y";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ppair
