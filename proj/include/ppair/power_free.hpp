#pragma once

// Is prod g_i^{n_i} of the form y * H(x)^e over the algebraic closure?
//
// Each g_i is split into squarefree parts, the parts of all g_i are refined
// into a gcd-free basis, and every basis element b carries the total
// multiplicity w_b of its roots in the product. The product is an e-th power
// (times a constant) iff every w_b is divisible by e.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ppair/characters.hpp"

namespace ppair {

struct PowerFreeBasis {
  struct Part {
    ExtPoly poly;                           // monic, squarefree, pairwise coprime
    std::vector<std::uint64_t> multiplicity;  // root multiplicity in g_i, one per input
  };
  std::vector<Part> parts;
};

/// Gcd-free basis of the inputs (all nonzero; throws InputError otherwise).
PowerFreeBasis power_free_basis(const FieldContext& ctx, const std::vector<ExtPoly>& polys);

struct PowerFreeCertificate {
  bool power_free = false;
  /// (basis polynomial, total multiplicity in prod g_i^{n_i}); a part whose
  /// multiplicity is not divisible by e witnesses power-freeness.
  std::vector<std::pair<std::string, std::uint64_t>> parts;
  std::string summary;
};

/// Decides power-freeness for exponents n_i (same length as the basis inputs).
PowerFreeCertificate decide_power_free(const FieldContext& ctx, const PowerFreeBasis& basis,
                                       const std::vector<std::uint64_t>& exponents, std::uint64_t e);

/// Fast form of decide_power_free without the certificate text.
bool power_free_fast(const PowerFreeBasis& basis, const std::vector<std::uint64_t>& exponents, std::uint64_t e);

PowerFreeCertificate is_power_free(const FieldContext& ctx, const std::vector<std::pair<ExtPoly, std::uint64_t>>& factors,
                                   std::uint64_t e);

/// Number of distinct roots of g in its splitting field (degree of rad g).
unsigned distinct_root_count(const FieldContext& ctx, const ExtPoly& g);

std::string poly_to_string(const FieldContext& ctx, const ExtPoly& g);

}  // namespace ppair
