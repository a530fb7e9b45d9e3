#include "ppair/audit.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include <fftw3.h>

#include "ppair/error.hpp"

namespace ppair {

namespace {

using Logs = std::vector<std::uint32_t>;
constexpr std::uint32_t kNoLog = FieldContext::kNoLog;

double half_power(std::uint64_t q, unsigned m) { return std::pow(static_cast<double>(q), m / 2.0); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

Logs image_logs(const CharacterGroup& group, const ExtPoly& g, const std::vector<FieldElement>& domain,
                const FieldElement* scalar = nullptr) {
  const ExtField F{&group.field()};
  Logs out;
  out.reserve(domain.size());
  for (const auto& lambda : domain) {
    FieldElement y = poly::evaluate(F, g, lambda);
    if (scalar) y = group.field().mul(*scalar, y);
    out.push_back(group.log(y));
  }
  return out;
}

Complex single_sum(const CharacterGroup& group, std::uint64_t t, const Logs& logs) {
  const std::uint64_t n = group.N();
  ComplexSum acc;
  for (std::uint32_t l : logs) {
    if (l == kNoLog) continue;
    acc.add(group.root(mulmod(t, l, n)));
  }
  return acc.value();
}

Complex pair_sum(const CharacterGroup& group, std::uint64_t t1, std::uint64_t t2, const Logs& l1, const Logs& l2) {
  const std::uint64_t n = group.N();
  ComplexSum acc;
  for (std::size_t i = 0; i < l1.size(); ++i) {
    if (l1[i] == kNoLog || l2[i] == kNoLog) continue;
    acc.add(group.root((mulmod(t1, l1[i], n) + mulmod(t2, l2[i], n)) % n));
  }
  return acc.value();
}

std::vector<FieldElement> whole_field(const FieldContext& ctx) {
  std::vector<FieldElement> out;
  out.reserve(ctx.size());
  for (std::uint64_t i = 0; i < ctx.size(); ++i) out.push_back(ctx.element_at(i));
  return out;
}

std::vector<FieldElement> hyperplane_elements(const HyperplaneSystem& sys, unsigned j) {
  std::vector<FieldElement> out;
  sys.for_each_in_intersection({j}, [&](const FieldElement& a) { out.push_back(a); });
  return out;
}

void require_nonprincipal(const Character& chi, const char* name) {
  if (chi.principal()) throw InputError(std::string("precondition: ") + name + " must be nonprincipal");
}

void require_monic_positive(const FieldContext& ctx, const ExtPoly& g, const char* name) {
  if (poly::degree<ExtField>(g) < 1) throw InputError(std::string("precondition: ") + name + " must have positive degree");
  if (g.back() != ctx.one()) throw InputError(std::string("precondition: ") + name + " must be monic");
}

void require_power_free(const FieldContext& ctx, const ExtPoly& g, std::uint64_t e, const char* name) {
  const PowerFreeCertificate cert = is_power_free(ctx, {{g, 1}}, e);
  if (!cert.power_free) throw InputError(std::string("precondition: ") + name + " " + cert.summary);
}

void require_coprime(const FieldContext& ctx, const ExtPoly& g1, const ExtPoly& g2) {
  const ExtField F{&ctx};
  if (poly::degree<ExtField>(poly::gcd(F, g1, g2)) != 0) throw InputError("precondition: g1 and g2 are not coprime");
}

std::string chi_str(const Character& chi) {
  return "t=" + std::to_string(chi.exponent) + " order=" + std::to_string(chi.order());
}

AuditRecord make_record(std::string kind, double lhs, double bound, bool pass,
                        std::vector<std::pair<std::string, std::string>> params) {
  AuditRecord r;
  r.kind = std::move(kind);
  r.lhs = lhs;
  r.bound = bound;
  r.pass = pass;
  r.parameters = std::move(params);
  return r;
}

std::pair<std::string, std::string> field_param(const CharacterGroup& group) {
  return {"field", "q=" + std::to_string(group.field().q()) + " m=" + std::to_string(group.field().m())};
}

// ---- batched DFT -----------------------------------------------------------

std::mutex& plan_mutex() {
  static std::mutex mu;
  return mu;
}

fftw_plan plan_for(std::uint64_t n) {
  static std::map<std::uint64_t, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(plan_mutex());
  auto it = plans.find(n);
  if (it != plans.end()) return it->second;
  auto* in = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  auto* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_free(in);
  fftw_free(out);
  plans.emplace(n, plan);
  return plan;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n) : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {}
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* data;
};

}  // namespace

std::vector<Complex> pair_sums_for_t1(const CharacterGroup& group, const Logs& logs1, const Logs& logs2, std::uint64_t t1) {
  const std::uint64_t n = group.N();
  if (logs1.size() != logs2.size()) throw InputError("log vectors differ in length");
  // w[v] = sum over lambda with log g2(lambda) = v of chi_t1(g1(lambda))
  std::vector<ComplexSum> w(n);
  for (std::size_t i = 0; i < logs1.size(); ++i) {
    if (logs1[i] == kNoLog || logs2[i] == kNoLog) continue;
    w[logs2[i]].add(group.root(mulmod(t1, logs1[i], n)));
  }
  FftwBuffer in(n), out(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    const Complex z = w[v].value();
    in.data[v][0] = z.real();
    in.data[v][1] = z.imag();
  }
  fftw_execute_dft(plan_for(n), in.data, out.data);
  std::vector<Complex> sums(n);
  for (std::uint64_t t2 = 0; t2 < n; ++t2) sums[t2] = Complex(out.data[t2][0], out.data[t2][1]);
  return sums;
}

double reis_delta(std::uint64_t q, unsigned m) {
  long double total = 0, binom = 1;
  for (unsigned i = 0; i < m; ++i) {
    const long double e = std::min<long double>(i, m / 2.0L);
    total += binom * std::pow(static_cast<long double>(q), e);
    binom = binom * (m - i) / (i + 1);
  }
  return static_cast<double>(total);
}

double reis_coarse(std::uint64_t q, unsigned m) { return (std::pow(2.0, m) - 1.0) * half_power(q, m); }

AuditRecord audit_weil_single(const CharacterGroup& group, const Character& chi, const ExtPoly& g, const FieldElement& a) {
  const FieldContext& ctx = group.field();
  require_nonprincipal(chi, "chi");
  require_monic_positive(ctx, g, "g");
  if (ctx.is_zero(a)) throw InputError("precondition: scalar a must be nonzero");
  require_power_free(ctx, g, chi.order(), "g");
  const unsigned d = distinct_root_count(ctx, g);
  const double lhs = std::abs(single_sum(group, chi.exponent, image_logs(group, g, whole_field(ctx), &a)));
  const double bound = (d - 1.0) * half_power(ctx.q(), ctx.m());
  return make_record("weil_single", lhs, bound, lhs <= bound + kAuditTolerance,
                     {field_param(group), {"chi", chi_str(chi)}, {"g", poly_to_string(ctx, g)}, {"a", ctx.to_string(a)},
                      {"d", std::to_string(d)}});
}

AuditRecord audit_weil_pair(const CharacterGroup& group, const Character& chi1, const Character& chi2, const ExtPoly& g1,
                            const ExtPoly& g2) {
  const FieldContext& ctx = group.field();
  require_nonprincipal(chi1, "chi1");
  require_nonprincipal(chi2, "chi2");
  require_monic_positive(ctx, g1, "g1");
  require_monic_positive(ctx, g2, "g2");
  require_coprime(ctx, g1, g2);
  require_power_free(ctx, g1, chi1.order(), "g1");
  require_power_free(ctx, g2, chi2.order(), "g2");
  const unsigned k1 = distinct_root_count(ctx, g1), k2 = distinct_root_count(ctx, g2);
  const auto domain = whole_field(ctx);
  const double lhs =
      std::abs(pair_sum(group, chi1.exponent, chi2.exponent, image_logs(group, g1, domain), image_logs(group, g2, domain)));
  const double bound = (k1 + k2 - 1.0) * half_power(ctx.q(), ctx.m());
  return make_record("weil_pair", lhs, bound, lhs <= bound + kAuditTolerance,
                     {field_param(group), {"chi1", chi_str(chi1)}, {"chi2", chi_str(chi2)}, {"g1", poly_to_string(ctx, g1)},
                      {"g2", poly_to_string(ctx, g2)}, {"k1", std::to_string(k1)}, {"k2", std::to_string(k2)}});
}

AuditRecord audit_hyperplane_sum(const CharacterGroup& group, const HyperplaneSystem& sys, const Character& chi,
                                 const ExtPoly& g, unsigned j) {
  const FieldContext& ctx = group.field();
  require_nonprincipal(chi, "chi");
  require_monic_positive(ctx, g, "g");
  require_power_free(ctx, g, chi.order(), "g");
  if (j >= ctx.m()) throw InputError("hyperplane index out of range");
  const unsigned d = distinct_root_count(ctx, g);
  const double lhs = std::abs(single_sum(group, chi.exponent, image_logs(group, g, hyperplane_elements(sys, j))));
  const double qm1 = std::pow(static_cast<double>(ctx.q()), ctx.m() - 1.0);
  const double bound = (d * qm1 - 1.0) / qm1 * half_power(ctx.q(), ctx.m());
  return make_record("hyperplane", lhs, bound, lhs <= bound + kAuditTolerance,
                     {field_param(group), {"chi", chi_str(chi)}, {"g", poly_to_string(ctx, g)},
                      {"j", std::to_string(j + 1)}, {"d", std::to_string(d)}});
}

AuditRecord audit_avoiding_sum(const CharacterGroup& group, const HyperplaneSystem& sys, const Character& chi) {
  const FieldContext& ctx = group.field();
  require_nonprincipal(chi, "chi");
  const ExtPoly x = poly::monomial_x(ExtField{&ctx});
  const double lhs = std::abs(single_sum(group, chi.exponent, image_logs(group, x, sys.enumerate_avoiding())));
  const double delta = reis_delta(ctx.q(), ctx.m());
  const double coarse = reis_coarse(ctx.q(), ctx.m());
  AuditRecord r = make_record("avoiding", lhs, delta, lhs <= delta + kAuditTolerance && delta <= coarse + kAuditTolerance,
                              {field_param(group), {"chi", chi_str(chi)}});
  r.coarse = coarse;
  return r;
}

AuditRecord audit_af1(const CharacterGroup& group, const HyperplaneSystem& sys, const Character& chi, const ExtPoly& g) {
  const FieldContext& ctx = group.field();
  require_nonprincipal(chi, "chi");
  if (poly::degree<ExtField>(g) < 1) throw InputError("precondition: g must have positive degree");
  require_power_free(ctx, g, chi.order(), "g");
  const int k = poly::degree<ExtField>(g);
  const double lhs = std::abs(single_sum(group, chi.exponent, image_logs(group, g, sys.enumerate_avoiding())));
  const double bound = k * std::pow(2.0, ctx.m()) * half_power(ctx.q(), ctx.m());
  return make_record("af1", lhs, bound, lhs <= bound + kAuditTolerance,
                     {field_param(group), {"chi", chi_str(chi)}, {"g", poly_to_string(ctx, g)}, {"k", std::to_string(k)}});
}

AuditRecord audit_af2(const CharacterGroup& group, const HyperplaneSystem& sys, const Character& chi1,
                      const Character& chi2, const ExtPoly& g1, const ExtPoly& g2) {
  const FieldContext& ctx = group.field();
  require_nonprincipal(chi1, "chi1");
  require_nonprincipal(chi2, "chi2");
  if (poly::degree<ExtField>(g1) < 1 || poly::degree<ExtField>(g2) < 1) {
    throw InputError("precondition: g1 and g2 must have positive degree");
  }
  require_coprime(ctx, g1, g2);
  require_power_free(ctx, g1, chi1.order(), "g1");
  require_power_free(ctx, g2, chi2.order(), "g2");
  const PowerFreeCertificate combined = is_power_free(ctx, {{g1, chi1.exponent}, {g2, chi2.exponent}}, group.N());
  if (!combined.power_free) throw InputError("precondition: g1^n1 g2^n2 " + combined.summary);
  const int k1 = poly::degree<ExtField>(g1), k2 = poly::degree<ExtField>(g2);
  const auto domain = sys.enumerate_avoiding();
  const double lhs =
      std::abs(pair_sum(group, chi1.exponent, chi2.exponent, image_logs(group, g1, domain), image_logs(group, g2, domain)));
  const double bound = (k1 + k2) * std::pow(2.0, ctx.m()) * half_power(ctx.q(), ctx.m());
  return make_record("af2", lhs, bound, lhs < bound,
                     {field_param(group), {"chi1", chi_str(chi1)}, {"chi2", chi_str(chi2)}, {"g1", poly_to_string(ctx, g1)},
                      {"g2", poly_to_string(ctx, g2)}});
}

std::vector<std::pair<std::uint64_t, unsigned>> fields_up_to(std::uint64_t qm_max) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= qm_max; ++q) {
    if (!is_prime_power(q)) continue;
    std::uint64_t size = q * q;
    for (unsigned m = 2; size <= qm_max; ++m) {
      out.emplace_back(q, m);
      if (size > qm_max / q) break;
      size *= q;
    }
  }
  return out;
}

namespace {

constexpr std::size_t kKeptViolations = 10;

class Tracker {
 public:
  Tracker(std::string kind, std::string polys) {
    s_.kind = std::move(kind);
    s_.polynomials = std::move(polys);
  }

  template <class MakeRecord>
  void check(double lhs, double bound, bool pass, MakeRecord&& make) {
    ++s_.checks;
    const double margin = bound - lhs;
    if (!pass) {
      ++s_.violations;
      if (s_.violation_records.size() < kKeptViolations) s_.violation_records.push_back(make());
    }
    if (!s_.tightest || margin < best_margin_) {
      best_margin_ = margin;
      s_.tightest = make();
    }
  }
  void skip(std::uint64_t n = 1) { s_.skipped += n; }
  SweepKindSummary take() { return std::move(s_); }

 private:
  SweepKindSummary s_;
  double best_margin_ = 0;
};

struct TestPoly {
  std::string name;
  ExtPoly g;
  unsigned distinct_roots;
  int degree;
  PowerFreeBasis basis;
};

}  // namespace

FieldSweep audit_field(std::uint64_t q, unsigned m, const AuditSweepOptions& options) {
  const FieldPtr ctx = FieldContext::build_q(q, m);
  const CharacterGroup group(ctx);
  const HyperplaneSystem sys(ctx, Coordinates(m, 0));
  const ExtField F{ctx.get()};
  const Quadratic f = default_quadratic(*ctx);
  const std::uint64_t n = group.N();
  const double qhalf = half_power(q, m);
  const double two_m = std::pow(2.0, m);

  FieldSweep out;
  out.q = q;
  out.m = m;
  out.N = n;
  out.quadratic = to_string(*ctx, f);

  std::vector<TestPoly> polys;
  for (const ExtPoly& g : {poly::monomial_x(F), ExtPoly{ctx->one(), ctx->one()}, to_poly(f)}) {
    polys.push_back({poly_to_string(*ctx, g), g, distinct_root_count(*ctx, g), poly::degree<ExtField>(g),
                     power_free_basis(*ctx, {g})});
  }
  // power_ok[p][t]: polys[p] is not an ord(chi_t)-th power.
  std::vector<std::vector<char>> power_ok(polys.size(), std::vector<char>(n, 0));
  for (std::size_t p = 0; p < polys.size(); ++p) {
    for (std::uint64_t t = 1; t < n; ++t) {
      power_ok[p][t] = power_free_fast(polys[p].basis, {1}, Character{t, n}.order());
    }
  }

  const auto all = whole_field(*ctx);
  const auto avoid = sys.enumerate_avoiding();
  std::vector<Logs> logs_all, logs_avoid;
  for (const auto& tp : polys) {
    logs_all.push_back(image_logs(group, tp.g, all));
    logs_avoid.push_back(image_logs(group, tp.g, avoid));
  }
  auto param_chi = [&](const char* key, std::uint64_t t) {
    return std::pair<std::string, std::string>{key, chi_str(Character{t, n})};
  };
  const auto fparam = field_param(group);

  // Single-character sums over the whole field.
  for (std::size_t p = 0; p < polys.size(); ++p) {
    Tracker tr("weil_single", polys[p].name);
    const double bound = (polys[p].distinct_roots - 1.0) * qhalf;
    for (std::uint64_t t = 1; t < n; ++t) {
      if (!power_ok[p][t]) {
        tr.skip();
        continue;
      }
      const double lhs = std::abs(single_sum(group, t, logs_all[p]));
      tr.check(lhs, bound, lhs <= bound + kAuditTolerance, [&] {
        return make_record("weil_single", lhs, bound, lhs <= bound + kAuditTolerance,
                           {fparam, param_chi("chi", t), {"g", polys[p].name}, {"a", "1"},
                            {"d", std::to_string(polys[p].distinct_roots)}});
      });
    }
    out.kinds.push_back(tr.take());
  }

  // Hyperplane sums.
  const double qm1 = std::pow(static_cast<double>(q), m - 1.0);
  for (std::size_t p = 0; p < polys.size(); ++p) {
    Tracker tr("hyperplane", polys[p].name);
    const double bound = (polys[p].distinct_roots * qm1 - 1.0) / qm1 * qhalf;
    for (unsigned j = 0; j < m; ++j) {
      const Logs logs = image_logs(group, polys[p].g, hyperplane_elements(sys, j));
      for (std::uint64_t t = 1; t < n; ++t) {
        if (!power_ok[p][t]) {
          tr.skip();
          continue;
        }
        const double lhs = std::abs(single_sum(group, t, logs));
        tr.check(lhs, bound, lhs <= bound + kAuditTolerance, [&] {
          return make_record("hyperplane", lhs, bound, lhs <= bound + kAuditTolerance,
                             {fparam, param_chi("chi", t), {"g", polys[p].name}, {"j", std::to_string(j + 1)},
                              {"d", std::to_string(polys[p].distinct_roots)}});
        });
      }
    }
    out.kinds.push_back(tr.take());
  }

  // Avoiding-set sums (polys[0] is x, so logs_avoid[0] are the logs of S).
  {
    Tracker tr("avoiding", "x");
    const double delta = reis_delta(q, m), coarse = reis_coarse(q, m);
    for (std::uint64_t t = 1; t < n; ++t) {
      const double lhs = std::abs(single_sum(group, t, logs_avoid[0]));
      const bool pass = lhs <= delta + kAuditTolerance && delta <= coarse + kAuditTolerance;
      tr.check(lhs, delta, pass, [&] {
        AuditRecord r = make_record("avoiding", lhs, delta, pass, {fparam, param_chi("chi", t)});
        r.coarse = coarse;
        return r;
      });
    }
    out.kinds.push_back(tr.take());
  }

  // af1 over S.
  for (std::size_t p = 0; p < polys.size(); ++p) {
    Tracker tr("af1", polys[p].name);
    const double bound = polys[p].degree * two_m * qhalf;
    for (std::uint64_t t = 1; t < n; ++t) {
      if (!power_ok[p][t]) {
        tr.skip();
        continue;
      }
      const double lhs = std::abs(single_sum(group, t, logs_avoid[p]));
      tr.check(lhs, bound, lhs <= bound + kAuditTolerance, [&] {
        return make_record("af1", lhs, bound, lhs <= bound + kAuditTolerance,
                           {fparam, param_chi("chi", t), {"g", polys[p].name}, {"k", std::to_string(polys[p].degree)}});
      });
    }
    out.kinds.push_back(tr.take());
  }

  if (options.pairs) {
    const std::pair<std::size_t, std::size_t> combos[] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& [i1, i2] : combos) {
      const std::string names = polys[i1].name + " ; " + polys[i2].name;
      Tracker weil("weil_pair", names), af2("af2", names);
      if (poly::degree<ExtField>(poly::gcd(F, polys[i1].g, polys[i2].g)) != 0) {
        weil.skip((n - 1) * (n - 1));
        af2.skip((n - 1) * (n - 1));
        out.kinds.push_back(weil.take());
        out.kinds.push_back(af2.take());
        continue;
      }
      const PowerFreeBasis joint = power_free_basis(*ctx, {polys[i1].g, polys[i2].g});
      const double weil_bound = (polys[i1].distinct_roots + polys[i2].distinct_roots - 1.0) * qhalf;
      const double af2_bound = (polys[i1].degree + polys[i2].degree) * two_m * qhalf;
      for (std::uint64_t t1 = 1; t1 < n; ++t1) {
        if (!power_ok[i1][t1]) {
          weil.skip(n - 1);
          af2.skip(n - 1);
          continue;
        }
        const auto sums_all = pair_sums_for_t1(group, logs_all[i1], logs_all[i2], t1);
        const auto sums_avoid = pair_sums_for_t1(group, logs_avoid[i1], logs_avoid[i2], t1);
        for (std::uint64_t t2 = 1; t2 < n; ++t2) {
          if (!power_ok[i2][t2]) {
            weil.skip();
            af2.skip();
            continue;
          }
          auto params = [&] {
            return std::vector<std::pair<std::string, std::string>>{
                fparam, param_chi("chi1", t1), param_chi("chi2", t2), {"g1", polys[i1].name}, {"g2", polys[i2].name}};
          };
          const double lw = std::abs(sums_all[t2]);
          weil.check(lw, weil_bound, lw <= weil_bound + kAuditTolerance,
                     [&] { return make_record("weil_pair", lw, weil_bound, lw <= weil_bound + kAuditTolerance, params()); });
          if (!power_free_fast(joint, {t1, t2}, n)) {
            af2.skip();
            continue;
          }
          const double la = std::abs(sums_avoid[t2]);
          af2.check(la, af2_bound, la < af2_bound, [&] { return make_record("af2", la, af2_bound, la < af2_bound, params()); });
        }
      }
      out.kinds.push_back(weil.take());
      out.kinds.push_back(af2.take());
    }
  }

  for (const auto& k : out.kinds) {
    out.checks += k.checks;
    out.violations += k.violations;
  }
  return out;
}

AuditSweepReport audit_sweep(std::uint64_t qm_max, const AuditSweepOptions& options) {
  if (qm_max < 4) throw InputError("qm-max must be at least 4");
  if (qm_max > FieldContext::kLogTableLimit) throw BudgetError("audit sweeps are limited to q^m <= 2^24");
  const auto start = std::chrono::steady_clock::now();
  const auto fields = fields_up_to(qm_max);
  AuditSweepReport report;
  report.qm_max = qm_max;
  report.fields.resize(fields.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < fields.size(); i = next++) {
      report.fields[i] = audit_field(fields[i].first, fields[i].second, options);
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  for (const auto& f : report.fields) {
    report.checks += f.checks;
    report.violations += f.violations;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ppair
