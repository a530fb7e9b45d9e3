#include "ppair/power_free.hpp"

#include <sstream>

#include "ppair/error.hpp"

namespace ppair {

namespace {

std::string coeff_str(const FieldContext& ctx, const FieldElement& a) {
  for (unsigned i = 1; i < ctx.m(); ++i) {
    if (a.c[i]) return ctx.to_string(a);
  }
  return ctx.base().to_string(a.c[0]);
}

}  // namespace

std::string poly_to_string(const FieldContext& ctx, const ExtPoly& g) {
  if (g.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = g.size(); i-- > 0;) {
    if (ctx.is_zero(g[i])) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = g[i] == ctx.one();
    if (i == 0) {
      os << coeff_str(ctx, g[i]);
      continue;
    }
    if (!unit) os << coeff_str(ctx, g[i]) << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

PowerFreeBasis power_free_basis(const FieldContext& ctx, const std::vector<ExtPoly>& polys) {
  const ExtField F{&ctx};
  const std::size_t n = polys.size();
  PowerFreeBasis basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (polys[i].empty()) throw InputError("power-freeness of the zero polynomial is undefined");
    for (auto& [s0, k] : poly::squarefree_decomposition(F, polys[i])) {
      ExtPoly s = s0;
      // Refine against the current basis; s and every part are squarefree.
      for (std::size_t b = 0; b < basis.parts.size() && poly::degree<ExtField>(s) > 0; ++b) {
        const ExtPoly g = poly::gcd(F, s, basis.parts[b].poly);
        if (poly::degree<ExtField>(g) <= 0) continue;
        const ExtPoly rest = poly::divmod(F, basis.parts[b].poly, g).first;
        auto mult = basis.parts[b].multiplicity;
        basis.parts[b].poly = g;
        basis.parts[b].multiplicity[i] += k;
        if (poly::degree<ExtField>(rest) > 0) basis.parts.push_back({poly::make_monic(F, rest), mult});
        s = poly::divmod(F, s, g).first;
      }
      if (poly::degree<ExtField>(s) > 0) {
        PowerFreeBasis::Part part{poly::make_monic(F, s), std::vector<std::uint64_t>(n, 0)};
        part.multiplicity[i] = k;
        basis.parts.push_back(std::move(part));
      }
    }
  }
  return basis;
}

bool power_free_fast(const PowerFreeBasis& basis, const std::vector<std::uint64_t>& exponents, std::uint64_t e) {
  for (const auto& part : basis.parts) {
    unsigned __int128 w = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) w += static_cast<unsigned __int128>(part.multiplicity[i]) * exponents[i];
    if (w % e) return true;
  }
  return false;
}

PowerFreeCertificate decide_power_free(const FieldContext& ctx, const PowerFreeBasis& basis,
                                       const std::vector<std::uint64_t>& exponents, std::uint64_t e) {
  if (e == 0) throw InputError("power-freeness needs e >= 1");
  PowerFreeCertificate cert;
  std::ostringstream os;
  for (const auto& part : basis.parts) {
    unsigned __int128 w = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) w += static_cast<unsigned __int128>(part.multiplicity[i]) * exponents[i];
    const auto total = static_cast<std::uint64_t>(w);
    cert.parts.emplace_back(poly_to_string(ctx, part.poly), total);
    if (total % e) cert.power_free = true;
  }
  os << (cert.power_free ? "not an " : "is an ") << e << "-th power up to a constant; root multiplicities:";
  if (cert.parts.empty()) os << " none (constant)";
  for (const auto& [p, w] : cert.parts) os << " (" << p << ")^" << w;
  cert.summary = os.str();
  return cert;
}

PowerFreeCertificate is_power_free(const FieldContext& ctx, const std::vector<std::pair<ExtPoly, std::uint64_t>>& factors,
                                   std::uint64_t e) {
  std::vector<ExtPoly> polys;
  std::vector<std::uint64_t> exponents;
  for (const auto& [g, n] : factors) {
    polys.push_back(g);
    exponents.push_back(n);
  }
  return decide_power_free(ctx, power_free_basis(ctx, polys), exponents, e);
}

unsigned distinct_root_count(const FieldContext& ctx, const ExtPoly& g) {
  const ExtField F{&ctx};
  unsigned d = 0;
  for (const auto& [s, k] : poly::squarefree_decomposition(F, g)) d += static_cast<unsigned>(poly::degree<ExtField>(s));
  return d;
}

}  // namespace ppair
