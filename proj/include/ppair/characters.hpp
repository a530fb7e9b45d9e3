#pragma once

// Multiplicative characters of F_{q^m}^*: chi_t(g^j) = exp(2 pi i t j / N) for
// the context generator g, extended by chi(0) = 0 for every t.

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ppair/finite_field.hpp"
#include "ppair/hyperplane.hpp"
#include "ppair/polynomial.hpp"

namespace ppair {

using Complex = std::complex<double>;
using ExtPoly = poly::Poly<ExtField>;

/// Compensated (Neumaier) complex summation.
class ComplexSum {
 public:
  void add(Complex z) {
    step(re_, cre_, z.real());
    step(im_, cim_, z.imag());
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void step(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

/// Roots-of-unity table and logarithms for one field. Needs q^m <= 2^24.
class CharacterGroup {
 public:
  explicit CharacterGroup(FieldPtr ctx);

  const FieldContext& field() const { return *ctx_; }
  const FieldPtr& field_ptr() const { return ctx_; }
  std::uint64_t N() const { return n_; }
  /// exp(2 pi i j / N), 0 <= j < N.
  const Complex& root(std::uint64_t j) const { return roots_[j]; }
  const std::vector<Complex>& roots() const { return roots_; }
  /// Discrete log of a, or FieldContext::kNoLog when a = 0.
  std::uint32_t log(const FieldElement& a) const { return logs_[ctx_->index_of(a)]; }

 private:
  FieldPtr ctx_;
  std::uint64_t n_;
  std::vector<Complex> roots_;
  const std::vector<std::uint32_t>& logs_;
};

using GroupPtr = std::shared_ptr<const CharacterGroup>;

struct Character {
  std::uint64_t exponent = 0;  // t in [0, N)
  std::uint64_t N = 1;

  std::uint64_t order() const;
  bool principal() const { return exponent % N == 0; }
};

/// Throws InputError unless t < N.
Character make_character(const CharacterGroup& group, std::uint64_t t);
Complex char_eval(const CharacterGroup& group, const Character& chi, const FieldElement& a);

/// f(x) = a x^2 + b x + c over F_{q^m}.
struct Quadratic {
  FieldElement a, b, c;
};

/// Throws InputError naming the failing condition (a = 0, or b^2 = 4ac).
void validate_quadratic(const FieldContext& ctx, const Quadratic& f);
bool is_valid_quadratic(const FieldContext& ctx, const Quadratic& f);
/// x^2 + x + c0 with c0 the first nonzero element (enumeration order) that
/// makes the quadratic valid. c0 != 0 keeps f coprime to x.
Quadratic default_quadratic(const FieldContext& ctx);
FieldElement evaluate(const FieldContext& ctx, const Quadratic& f, const FieldElement& x);
ExtPoly to_poly(const Quadratic& f);
std::string to_string(const FieldContext& ctx, const Quadratic& f);

/// theta(e) sum_{d | e} mu(d)/phi(d) sum_{ord chi = d} chi(a). Rounds to the
/// e-free indicator. Throws InputError if a = 0 or e does not divide N.
double rho_efree(const CharacterGroup& group, const FieldElement& a, std::uint64_t e);
/// rho_efree with e = N.
double gamma_primitive(const CharacterGroup& group, const FieldElement& a);

/// sum over the given elements of gamma_primitive (zero elements skipped).
double count_primitive_formula(const CharacterGroup& group, const std::vector<FieldElement>& elements);

struct FormulaCount {
  double value = 0;
  double imag = 0;             // should vanish
  std::int64_t rounded = 0;
  double residual = 0;         // |value - rounded|
  std::uint64_t zero_images = 0;  // lambda in S with f(lambda) = 0 (contribute 0)
};

/// theta(d1) theta(d2) sum_{e1 | d1, e2 | d2} mu(e1) mu(e2) / (phi(e1) phi(e2))
///   sum_{chi_e1, chi_e2} sum_{lambda in S} chi_e1(lambda) chi_e2(f(lambda)).
FormulaCount count_pairs_formula(const CharacterGroup& group, const HyperplaneSystem& sys, const Quadratic& f,
                                 std::uint64_t d1, std::uint64_t d2);

}  // namespace ppair
