#pragma once

// Dense univariate polynomials over a finite field given by an adaptor F:
//
//   using Elem = ...;
//   Elem zero() const; Elem one() const;
//   Elem add(Elem, Elem) const; Elem sub(Elem, Elem) const; Elem neg(Elem) const;
//   Elem mul(Elem, Elem) const; Elem inv(Elem) const;
//   bool is_zero(const Elem&) const; bool equal(const Elem&, const Elem&) const;
//   std::uint64_t characteristic() const;
//   std::uint64_t order() const;          // number of field elements
//   Elem pth_root(Elem) const;            // inverse Frobenius
//
// Coefficients are stored lowest degree first; the zero polynomial is the
// empty vector and every other polynomial has a nonzero leading coefficient.

#include <cstdint>
#include <utility>
#include <vector>

#include "ppair/error.hpp"

namespace ppair::poly {

template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
int degree(const Poly<F>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class F>
bool equal(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!f.equal(a[i], b[i])) return false;
  }
  return true;
}

template <class F>
Poly<F> constant(const F& f, typename F::Elem c) {
  Poly<F> out;
  if (!f.is_zero(c)) out.push_back(c);
  return out;
}

template <class F>
Poly<F> monomial_x(const F& f) {
  return {f.zero(), f.one()};
}

template <class F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.add(out[i], b[i]);
  trim(f, out);
  return out;
}

template <class F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  trim(f, out);
  return out;
}

template <class F>
Poly<F> scale(const F& f, const Poly<F>& a, typename F::Elem c) {
  Poly<F> out(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
  trim(f, out);
  return out;
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(f, out);
  return out;
}

/// a = q * b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) throw InputError("polynomial division by zero");
  Poly<F> r = a;
  if (r.size() < b.size()) return {{}, r};
  Poly<F> q(r.size() - b.size() + 1, f.zero());
  const auto lead_inv = f.inv(b.back());
  for (std::size_t i = r.size(); i-- >= b.size();) {
    if (f.is_zero(r[i])) continue;
    const auto coef = f.mul(r[i], lead_inv);
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(coef, b[j]));
  }
  trim(f, q);
  trim(f, r);
  return {q, r};
}

template <class F>
Poly<F> mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return divmod(f, a, b).second;
}

template <class F>
Poly<F> make_monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

template <class F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    Poly<F> r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, a);
}

template <class F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  Poly<F> out;
  if (a.size() <= 1) return out;
  out.assign(a.size() - 1, f.zero());
  const std::uint64_t p = f.characteristic();
  for (std::size_t i = 1; i < a.size(); ++i) {
    // i * a_i with i reduced mod p, as a repeated sum of a_i
    typename F::Elem term = f.zero();
    for (std::uint64_t k = 0; k < i % p; ++k) term = f.add(term, a[i]);
    out[i - 1] = term;
  }
  trim(f, out);
  return out;
}

template <class F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return mod(f, mul(f, a, b), m);
}

template <class F>
Poly<F> powmod(const F& f, Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> result = mod(f, constant(f, f.one()), m);
  base = mod(f, base, m);
  while (e) {
    if (e & 1) result = mulmod(f, result, base, m);
    e >>= 1;
    if (e) base = mulmod(f, base, base, m);
  }
  return result;
}

template <class F>
typename F::Elem evaluate(const F& f, const Poly<F>& a, typename F::Elem x) {
  typename F::Elem acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

inline std::vector<std::uint64_t> distinct_prime_divisors_small(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Rabin's test: h of degree n > 0 over F_Q is irreducible iff
/// x^(Q^n) = x mod h and gcd(x^(Q^(n/r)) - x, h) = 1 for each prime r | n.
template <class F>
bool is_irreducible(const F& f, const Poly<F>& h) {
  const int n = degree<F>(h);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly<F> x = monomial_x(f);
  const std::uint64_t Q = f.order();
  // frob[i] = x^(Q^i) mod h
  std::vector<Poly<F>> frob{mod(f, x, h)};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(f, frob.back(), Q, h));
  if (!equal(f, frob[n], mod(f, x, h))) return false;
  for (std::uint64_t r : distinct_prime_divisors_small(static_cast<std::uint64_t>(n))) {
    const Poly<F> g = gcd(f, h, sub(f, frob[n / r], x));
    if (degree<F>(g) != 0) return false;
  }
  return true;
}

/// g(x) = h(x)^p when h' = 0: take p-th roots of the coefficients of x^(p*i).
template <class F>
Poly<F> pth_root_poly(const F& f, const Poly<F>& a) {
  const std::uint64_t p = f.characteristic();
  Poly<F> out;
  for (std::size_t i = 0; i < a.size(); i += p) out.push_back(f.pth_root(a[i]));
  trim(f, out);
  return out;
}

/// Squarefree factorization a = c * prod s_i^{k_i} with the s_i squarefree,
/// pairwise coprime and monic. Returns (s_i, k_i) with deg s_i > 0.
template <class F>
std::vector<std::pair<Poly<F>, std::uint64_t>> squarefree_decomposition(const F& f, const Poly<F>& a) {
  std::vector<std::pair<Poly<F>, std::uint64_t>> out;
  if (degree<F>(a) <= 0) return out;
  const std::uint64_t p = f.characteristic();
  // Musser's algorithm with p-th root recursion for characteristic p.
  struct Frame {
    Poly<F> poly;
    std::uint64_t mult;
  };
  std::vector<Frame> stack{{make_monic(f, a), 1}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (degree<F>(fr.poly) <= 0) continue;
    const Poly<F> d = derivative(f, fr.poly);
    if (d.empty()) {
      stack.push_back({pth_root_poly(f, fr.poly), fr.mult * p});
      continue;
    }
    Poly<F> c = gcd(f, fr.poly, d);
    Poly<F> w = divmod(f, fr.poly, c).first;
    std::uint64_t i = 1;
    while (degree<F>(w) > 0) {
      Poly<F> y = gcd(f, w, c);
      Poly<F> z = divmod(f, w, y).first;
      if (degree<F>(z) > 0) out.push_back({make_monic(f, z), i * fr.mult});
      ++i;
      w = std::move(y);
      c = divmod(f, c, w).first;
    }
    if (degree<F>(c) > 0) stack.push_back({pth_root_poly(f, c), fr.mult * p});
  }
  return out;
}

}  // namespace ppair::poly
