#include "ppair/finite_field.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

#include "ppair/error.hpp"
#include "ppair/polynomial.hpp"

namespace ppair {

namespace {

std::string join(const std::vector<std::uint32_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

FieldPtr FieldContext::build(std::uint64_t p, unsigned k, unsigned m) {
  return FieldPtr(new FieldContext(p, k, m));
}

FieldPtr FieldContext::build_q(std::uint64_t q, unsigned m) {
  std::uint64_t p = 0;
  unsigned k = 0;
  if (!is_prime_power(q, &p, &k)) throw InputError("q = " + std::to_string(q) + " is not a prime power");
  return build(p, k, m);
}

FieldContext::FieldContext(std::uint64_t p, unsigned k, unsigned m)
    : base_((m < 2 ? throw InputError("extension degree m must be at least 2") : BaseField(p, k))), m_(m) {
  const std::uint64_t q = base_.q();
  size_ = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (size_ > kMaxOrder / q) {
      throw BudgetError("field order q^m exceeds 2^40 (q = " + std::to_string(q) + ", m = " + std::to_string(m) + ")");
    }
    qpow_.push_back(size_);
    size_ *= q;
  }

  for (std::uint64_t index = 0; index < size_; ++index) {
    std::vector<std::uint32_t> cand(m);
    std::uint64_t rest = index;
    for (unsigned i = 0; i < m; ++i) {
      cand[i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    cand.push_back(1);
    if (poly::is_irreducible(base_, cand)) {
      ext_modulus_ = std::move(cand);
      break;
    }
  }
  for (unsigned j = 0; j < m; ++j) neg_tail_.push_back(base_.neg(ext_modulus_[j]));

  order_factorization_ = factorize_power_minus_one(q, m);
  for (const auto& pp : order_factorization_.factors) {
    primes_.push_back(to_u64(pp.prime));
    cofactors_.push_back(group_order() / primes_.back());
  }
  generator_ = find_generator();
}

FieldElement FieldContext::from_base(std::uint32_t c) const {
  FieldElement out;
  out.c[0] = c;
  return out;
}

FieldElement FieldContext::x() const {
  FieldElement out;
  out.c[1] = 1;
  return out;
}

FieldElement FieldContext::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > m_) throw InputError("element has more than m coefficients");
  FieldElement out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= q()) throw InputError("coefficient " + std::to_string(coeffs[i]) + " is not below q");
    out.c[i] = coeffs[i];
  }
  return out;
}

std::vector<std::uint32_t> FieldContext::coefficients(const FieldElement& a) const {
  return {a.c.begin(), a.c.begin() + m_};
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out;
  if (k() == 1) {
    const auto q32 = static_cast<std::uint32_t>(q());
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint32_t s = a.c[i] + b.c[i];
      out.c[i] = s >= q32 ? s - q32 : s;
    }
  } else if (p() == 2) {
    for (unsigned i = 0; i < m_; ++i) out.c[i] = a.c[i] ^ b.c[i];
  } else {
    for (unsigned i = 0; i < m_; ++i) out.c[i] = base_.add(a.c[i], b.c[i]);
  }
  return out;
}

FieldElement FieldContext::neg(const FieldElement& a) const {
  FieldElement out;
  for (unsigned i = 0; i < m_; ++i) out.c[i] = base_.neg(a.c[i]);
  return out;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
  FieldElement out;
  const unsigned m = m_;
  if (k() == 1) {
    const std::uint64_t q = base_.q();
    // Products are below 2^40 and at most ~3m of them land in one slot.
    std::uint64_t acc[2 * kMaxExtDegree - 1] = {};
    for (unsigned i = 0; i < m; ++i) {
      const std::uint64_t ai = a.c[i];
      if (!ai) continue;
      for (unsigned j = 0; j < m; ++j) acc[i + j] += ai * b.c[j];
    }
    for (unsigned i = 2 * m - 2; i >= m; --i) {
      const std::uint64_t t = acc[i] % q;
      if (!t) continue;
      for (unsigned j = 0; j < m; ++j) acc[i - m + j] += t * neg_tail_[j];
    }
    for (unsigned i = 0; i < m; ++i) out.c[i] = static_cast<std::uint32_t>(acc[i] % q);
    return out;
  }
  std::uint32_t acc[2 * kMaxExtDegree - 1] = {};
  for (unsigned i = 0; i < m; ++i) {
    if (!a.c[i]) continue;
    for (unsigned j = 0; j < m; ++j) {
      if (!b.c[j]) continue;
      acc[i + j] = base_.add(acc[i + j], base_.mul(a.c[i], b.c[j]));
    }
  }
  for (unsigned i = 2 * m - 2; i >= m; --i) {
    const std::uint32_t t = acc[i];
    if (!t) continue;
    for (unsigned j = 0; j < m; ++j) acc[i - m + j] = base_.add(acc[i - m + j], base_.mul(t, neg_tail_[j]));
  }
  for (unsigned i = 0; i < m; ++i) out.c[i] = acc[i];
  return out;
}

FieldElement FieldContext::scalar_mul(std::uint32_t s, const FieldElement& a) const {
  FieldElement out;
  for (unsigned i = 0; i < m_; ++i) out.c[i] = base_.mul(s, a.c[i]);
  return out;
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

FieldElement FieldContext::inv(const FieldElement& a) const {
  if (is_zero(a)) throw InputError("inverse of zero in F_{q^m}");
  return pow(a, size_ - 2);
}

std::uint64_t FieldContext::index_of(const FieldElement& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = 0; i < m_; ++i) idx += a.c[i] * qpow_[i];
  return idx;
}

FieldElement FieldContext::element_at(std::uint64_t index) const {
  if (index >= size_) throw InputError("element index out of range");
  FieldElement out;
  const std::uint64_t q = base_.q();
  for (unsigned i = 0; i < m_; ++i) {
    out.c[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return out;
}

std::uint64_t FieldContext::element_order(const FieldElement& a) const {
  if (is_zero(a)) throw InputError("order of zero is undefined");
  std::uint64_t order = group_order();
  const FieldElement id = one();
  for (std::uint64_t r : primes_) {
    while (order % r == 0 && pow(a, order / r) == id) order /= r;
  }
  return order;
}

bool FieldContext::is_primitive(const FieldElement& a) const {
  if (is_zero(a)) throw InputError("primitivity of zero is undefined");
  const FieldElement id = one();
  for (std::uint64_t c : cofactors_) {
    if (pow(a, c) == id) return false;
  }
  return true;
}

bool FieldContext::is_efree(const FieldElement& a, std::uint64_t e) const {
  if (e == 0 || group_order() % e) throw InputError("e = " + std::to_string(e) + " does not divide q^m - 1");
  if (is_zero(a)) throw InputError("e-freeness of zero is undefined");
  const FieldElement id = one();
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (e % primes_[i] == 0 && pow(a, cofactors_[i]) == id) return false;
  }
  return true;
}

FieldElement FieldContext::find_generator() const {
  for (std::uint64_t idx = 1; idx < size_; ++idx) {
    const FieldElement a = element_at(idx);
    if (is_primitive(a)) return a;
  }
  throw std::logic_error("no primitive element found");
}

void FieldContext::build_log_table() const {
  log_table_.assign(size_, kNoLog);
  FieldElement cur = one();
  const std::uint64_t n = group_order();
  for (std::uint64_t j = 0; j < n; ++j) {
    log_table_[index_of(cur)] = static_cast<std::uint32_t>(j);
    cur = mul(cur, generator_);
  }
}

const std::vector<std::uint32_t>& FieldContext::log_table() const {
  if (!has_log_table()) throw BudgetError("log table is only built for q^m <= 2^24");
  std::call_once(log_once_, [this] { build_log_table(); });
  return log_table_;
}

std::uint64_t FieldContext::bsgs_log(const FieldElement& a) const {
  const std::uint64_t n = group_order();
  const auto s = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(s);
  FieldElement cur = one();
  for (std::uint64_t j = 0; j < s; ++j) {
    baby.emplace(index_of(cur), j);
    cur = mul(cur, generator_);
  }
  const FieldElement giant = pow(generator_, n - (s % n));
  FieldElement gamma = a;
  for (std::uint64_t i = 0; i <= s; ++i) {
    auto it = baby.find(index_of(gamma));
    if (it != baby.end()) return (i * s + it->second) % n;
    gamma = mul(gamma, giant);
  }
  throw std::logic_error("baby-step giant-step failed");
}

std::uint64_t FieldContext::discrete_log(const FieldElement& a) const {
  if (is_zero(a)) throw InputError("discrete log of zero is undefined");
  if (has_log_table()) return log_table()[index_of(a)];
  return bsgs_log(a);
}

std::string FieldContext::to_string(const FieldElement& a) const { return join(coefficients(a)); }

std::string FieldContext::summary() const {
  std::ostringstream os;
  os << "p=" << p() << "\n"
     << "k=" << k() << "\n"
     << "m=" << m_ << "\n"
     << "q=" << q() << "\n"
     << "base_modulus=" << join(base_.modulus()) << "\n"
     << "ext_modulus=" << join(ext_modulus_) << "\n"
     << "generator=" << to_string(generator_) << "\n"
     << "N=" << group_order() << "\n"
     << "N_factorization=" << order_factorization_.to_string() << "\n";
  return os.str();
}

}  // namespace ppair
