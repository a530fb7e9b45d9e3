#pragma once

#include <string>

#include <mpfr.h>

#include "ppair/numtheory.hpp"

namespace ppair {

/// Owning wrapper over an mpfr_t with a fixed precision in bits. Results of
/// arithmetic take the precision of the left operand.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(mpfr_prec_t bits, long value);
  BigFloat(mpfr_prec_t bits, const BigInt& value);
  BigFloat(mpfr_prec_t bits, const Rational& value);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits = 12) const;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);

}  // namespace ppair
