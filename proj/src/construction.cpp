#include "bfk/construction.hpp"

#include "bfk/errors.hpp"
#include "bfk/summation.hpp"

#include <cmath>

namespace bfk {

namespace {

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  CompensatedSum<double> sx, sy, sxx, sxy;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(y[i] != 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  const double dn = static_cast<double>(n);
  const double den = dn * sxx.value() - sx.value() * sx.value();
  return den > 0.0 ? (dn * sxy.value() - sx.value() * sy.value()) / den : 0.0;
}

double mean_abs(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  CompensatedSum<double> s;
  for (std::size_t i = lo; i < hi; ++i) s += std::abs(v[i]);
  return hi > lo ? s.value() / static_cast<double>(hi - lo) : 0.0;
}

}  // namespace

std::string to_string(ConstructionVariant v) {
  switch (v) {
    case ConstructionVariant::standard: return "standard";
    case ConstructionVariant::even_only: return "even_only";
    case ConstructionVariant::odd_only: return "odd_only";
  }
  return "?";
}

ConstructionVariant construction_variant_from_string(const std::string& s) {
  if (s == "standard") return ConstructionVariant::standard;
  if (s == "even_only") return ConstructionVariant::even_only;
  if (s == "odd_only") return ConstructionVariant::odd_only;
  throw DomainError("unknown construction variant '" + s + "'");
}

KernelVariant kernel_variant_of(ConstructionVariant v) {
  switch (v) {
    case ConstructionVariant::even_only: return KernelVariant::even;
    case ConstructionVariant::odd_only: return KernelVariant::odd;
    default: return KernelVariant::standard;
  }
}

void ConstructionSpec::validate() const {
  if (!(alpha >= 0.0 && alpha < 0.5)) throw DomainError("ConstructionSpec: alpha must lie in [0, 1/2)");
  if (truncation_L < 1) throw DomainError("ConstructionSpec: truncation_L must be >= 1");
  if (seq.size() < truncation_L + 3)
    throw DomainError("ConstructionSpec: sequence needs at least truncation_L + 3 values");
}

std::size_t ConstructionSpec::zeros_needed() const {
  return mode_index(kernel_variant_of(variant), truncation_L);
}

double ConstructedFunction::evaluate(double x) const {
  CompensatedSum<double> acc;
  for (std::size_t m = 1; m < weights.size(); ++m) acc += weights[m] * bessel_j0(freqs[m] * x);
  return acc.value();
}

Integrand ConstructedFunction::integrand() const {
  return {[this](double x) { return evaluate(x); }, 0.0, bandwidth()};
}

QuadratureConfig weighted_norm_config() {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-7;
  cfg.abs_tol = 1e-9;
  cfg.max_refinements = 10;
  return cfg;
}

ConstructedFunction build_f(const ConstructionSpec& spec, const ZeroTable& table, const QuadratureConfig& norm_cfg) {
  spec.validate();
  if (spec.zeros_needed() > table.count())
    throw RangeError("build_f: construction needs " + std::to_string(spec.zeros_needed()) + " zeros, table has " +
                     std::to_string(table.count()));
  const std::size_t L = spec.truncation_L;
  const KernelVariant kv = kernel_variant_of(spec.variant);
  ConstructedFunction f;
  f.spec = spec;
  f.weights.assign(L + 1, 0.0);
  f.freqs.assign(L + 1, 0.0);
  for (std::size_t m = 1; m <= L; ++m) {
    f.weights[m] = std::pow(table.zero(m), spec.alpha) * truncated_telescope(spec.seq, m, L);
    f.freqs[m] = table.zero(mode_index(kv, m));
  }
  const double breaks[] = {0.0, 1.0};
  const double p = spec.alpha + 1.0;
  const auto q = integrate_panels([&](double x) { return std::abs(f.evaluate(x)) * std::pow(x, p); }, breaks, p,
                                  f.bandwidth(), norm_cfg);
  f.weighted_l1 = q.value;
  f.weighted_l1_error = q.error;
  return f;
}

double evaluate_direct(const ConstructionSpec& spec, double x, const ZeroTable& table) {
  spec.validate();
  const KernelVariant kv = kernel_variant_of(spec.variant);
  CompensatedSum<double> acc;
  for (std::size_t l = 1; l <= spec.truncation_L; ++l) {
    const double w = static_cast<double>(l + 1) * spec.seq.second_diffs[l];
    if (w != 0.0) acc += w * kernel_value({kv, spec.alpha, l}, x, table);
  }
  return acc.value();
}

double expected_coefficient(const ConstructionSpec& spec, std::size_t n, const ZeroTable& table) {
  spec.validate();
  std::size_t m = 0;
  switch (spec.variant) {
    case ConstructionVariant::standard: m = n; break;
    case ConstructionVariant::even_only: m = n % 2 == 0 ? n / 2 : 0; break;
    case ConstructionVariant::odd_only: m = (n % 2 == 1 && n >= 3) ? (n - 1) / 2 : 0; break;
  }
  if (m == 0 || m > spec.truncation_L) return 0.0;
  return std::pow(table.zero(m), spec.alpha) * truncated_telescope(spec.seq, m, spec.truncation_L);
}

CoeffReport coefficients_of_f(const ConstructedFunction& f, std::size_t m_first, std::size_t m_last,
                              const ZeroTable& table, const QuadratureConfig& cfg) {
  return bf_coefficients(f.integrand(), m_first, m_last, f.spec.alpha, table, cfg);
}

QuadEstimate kernel_weighted_l1(const KernelSpec& spec, double power, const ZeroTable& table,
                                const QuadratureConfig& cfg) {
  spec.validate();
  if (spec.variant == KernelVariant::fejer) throw DomainError("kernel_weighted_l1: Bessel variants only");
  if (!(power >= 0.0)) throw DomainError("kernel_weighted_l1: power must be >= 0");
  if (spec.zeros_needed() > table.count()) throw RangeError("kernel_weighted_l1: zero table too short");
  const double bandwidth = spec.M == 0 ? 0.0 : table.zero(spec.zeros_needed());
  const double breaks[] = {0.0, 1.0};
  return integrate_panels(
      [&](double x) { return std::abs(kernel_value(spec, x, table)) * std::pow(x, power); }, breaks, power,
      bandwidth, cfg);
}

DecayReport decay_experiment(double s, const Integrand& f, std::size_t m_first, std::size_t m_last,
                             const ZeroTable& table, const QuadratureConfig& cfg) {
  if (!(s >= 0.0 && s <= 0.5)) throw DomainError("decay_experiment: s must lie in [0, 1/2]");
  const CoeffReport rep = bf_coefficients(f, m_first, m_last, 0.0, table, cfg);
  DecayReport out;
  out.s = s;
  for (const auto& e : rep.entries) {
    out.m.push_back(e.m);
    out.j.push_back(e.j_m);
    out.coeff.push_back(e.f_m);
    out.ratio.push_back(e.f_m / std::pow(e.j_m, 0.5 + s));
  }
  out.loglog_slope = least_squares_slope(out.j, out.ratio);
  const std::size_t n = out.ratio.size(), q = std::max<std::size_t>(1, n / 4);
  out.first_quartile_mean = mean_abs(out.ratio, 0, q);
  out.last_quartile_mean = mean_abs(out.ratio, n - q, n);
  out.decaying = out.last_quartile_mean < out.first_quartile_mean;
  return out;
}

}  // namespace bfk
