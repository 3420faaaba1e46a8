#include "bfk/kernels.hpp"

#include "bfk/errors.hpp"
#include "bfk/parallel.hpp"
#include "bfk/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bfk {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha, const char* who) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw DomainError(std::string(who) + ": alpha must lie in [0, 1/2]");
}

void check_grid(std::span<const double> grid, const char* who) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0))
      throw DomainError(std::string(who) + ": grid points must lie in [0, 1]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw DomainError(std::string(who) + ": grid must be strictly increasing");
  }
}

void require_table(const KernelSpec& spec, const ZeroTable& table, const char* who) {
  const std::size_t need = spec.zeros_needed();
  if (need > table.count())
    throw RangeError(std::string(who) + ": kernel needs " + std::to_string(need) +
                     " zeros, table has " + std::to_string(table.count()));
}

// (cos r + sin r)/sqrt(2) = cos(r - pi/4)
double cos_shifted(double r) { return (std::cos(r) + std::sin(r)) * std::numbers::sqrt2 / 2.0; }

}  // namespace

std::string to_string(KernelVariant v) {
  switch (v) {
    case KernelVariant::standard: return "standard";
    case KernelVariant::even: return "even";
    case KernelVariant::odd: return "odd";
    case KernelVariant::fejer: return "fejer";
  }
  return "?";
}

KernelVariant kernel_variant_from_string(const std::string& s) {
  if (s == "standard") return KernelVariant::standard;
  if (s == "even") return KernelVariant::even;
  if (s == "odd") return KernelVariant::odd;
  if (s == "fejer") return KernelVariant::fejer;
  throw DomainError("unknown kernel variant '" + s + "'");
}

void KernelSpec::validate() const {
  if (variant != KernelVariant::fejer) check_alpha(alpha, "KernelSpec");
}

std::size_t KernelSpec::zeros_needed() const {
  if (variant == KernelVariant::fejer || M == 0) return 0;
  return mode_index(variant, M);
}

std::size_t mode_index(KernelVariant v, std::size_t m) {
  switch (v) {
    case KernelVariant::even: return 2 * m;
    case KernelVariant::odd: return 2 * m + 1;
    default: return m;
  }
}

double kernel_value(const KernelSpec& spec, double x, const ZeroTable& table) {
  spec.validate();
  if (spec.variant == KernelVariant::fejer) return fejer_closed_form(static_cast<long>(spec.M), x);
  if (spec.M == 0) return 1.0;
  require_table(spec, table, "kernel_value");
  const double inv = 1.0 / static_cast<double>(spec.M + 1);
  CompensatedSum<double> acc;
  for (std::size_t m = 1; m <= spec.M; ++m) {
    const double w = (1.0 - static_cast<double>(m) * inv) * std::pow(table.zero(m), spec.alpha);
    acc += w * bessel_j0(table.zero(mode_index(spec.variant, m)) * x);
  }
  return acc.value();
}

KernelEval eval_kernel(const KernelSpec& spec, std::span<const double> grid, const ZeroTable& table) {
  spec.validate();
  check_grid(grid, "eval_kernel");
  require_table(spec, table, "eval_kernel");
  KernelEval out{spec, {grid.begin(), grid.end()}, std::vector<double>(grid.size())};
  parallel_for(grid.size(), [&](std::size_t i) { out.values[i] = kernel_value(spec, grid[i], table); });
  return out;
}

std::vector<std::vector<double>> eval_kernel_family(KernelVariant variant, double alpha,
                                                    std::span<const std::size_t> Ms,
                                                    std::span<const double> grid,
                                                    const ZeroTable& table) {
  if (variant == KernelVariant::fejer) throw DomainError("eval_kernel_family: Bessel variants only");
  check_alpha(alpha, "eval_kernel_family");
  check_grid(grid, "eval_kernel_family");
  std::size_t m_max = 0;
  for (std::size_t M : Ms) m_max = std::max(m_max, M);
  require_table(KernelSpec{variant, alpha, m_max}, table, "eval_kernel_family");

  // Positions in Ms ordered by M so one sweep over m can emit each K_M.
  std::vector<std::size_t> order(Ms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return Ms[a] < Ms[b]; });

  std::vector<double> jalpha(m_max + 1), freq(m_max + 1);
  for (std::size_t m = 1; m <= m_max; ++m) {
    jalpha[m] = std::pow(table.zero(m), alpha);
    freq[m] = table.zero(mode_index(variant, m));
  }

  std::vector<std::vector<double>> out(Ms.size(), std::vector<double>(grid.size()));
  parallel_for(grid.size(), [&](std::size_t i) {
    const double x = grid[i];
    CompensatedSum<double> a, b;
    std::size_t next = 0;
    while (next < order.size() && Ms[order[next]] == 0) out[order[next++]][i] = 1.0;
    for (std::size_t m = 1; m <= m_max && next < order.size(); ++m) {
      const double t = jalpha[m] * bessel_j0(freq[m] * x);
      a += t;
      b += static_cast<double>(m) * t;
      while (next < order.size() && Ms[order[next]] == m) {
        out[order[next++]][i] = a.value() - b.value() / static_cast<double>(m + 1);
      }
    }
  });
  return out;
}

double kernel_lipschitz(const KernelSpec& spec, const ZeroTable& table) {
  spec.validate();
  const double inv = 1.0 / static_cast<double>(spec.M + 1);
  double total = 0.0;
  if (spec.variant == KernelVariant::fejer) {
    for (std::size_t n = 1; n <= spec.M; ++n) total += 2.0 * (1.0 - n * inv) * 2.0 * kPi * n;
    return total;
  }
  require_table(spec, table, "kernel_lipschitz");
  for (std::size_t m = 1; m <= spec.M; ++m)
    total += (1.0 - m * inv) * std::pow(table.zero(m), spec.alpha) * table.zero(mode_index(spec.variant, m));
  return total * kJ1Sup;
}

double partial_sum(double alpha, std::size_t M, double x, const ZeroTable& table) {
  check_alpha(alpha, "partial_sum");
  table.require(std::max<std::size_t>(M, 1), "partial_sum");
  CompensatedSum<double> acc;
  for (std::size_t m = 1; m <= M; ++m) acc += std::pow(table.zero(m), alpha) * bessel_j0(table.zero(m) * x);
  return acc.value();
}

double fejer_sum(long N, double x) {
  if (N < 0) throw DomainError("fejer_sum: N must be >= 0");
  const double r = x - std::round(x);
  CompensatedSum<double> acc;
  acc += 1.0;
  for (long n = 1; n <= N; ++n)
    acc += 2.0 * (1.0 - static_cast<double>(n) / static_cast<double>(N + 1)) * std::cos(2.0 * kPi * n * r);
  return acc.value();
}

double fejer_closed_form(long N, double x) {
  if (N < 0) throw DomainError("fejer_closed_form: N must be >= 0");
  // F_N has period 1; r is exact and sin(pi r) keeps full relative accuracy.
  const double r = x - std::round(x);
  const double n1 = static_cast<double>(N + 1);
  if (r == 0.0) return n1;
  const double num = std::sin(kPi * n1 * r), den = std::sin(kPi * r);
  return num * num / (n1 * den * den);
}

DecompositionEval eval_decomposition(double alpha, std::size_t M, double x, const ZeroTable& table,
                                     const BesselEvalConfig& cfg) {
  check_alpha(alpha, "eval_decomposition");
  if (!(x > 0.0 && x <= 1.0)) throw RangeError("eval_decomposition: x must lie in (0, 1]");
  table.require(std::max<std::size_t>(M, 1), "eval_decomposition");
  CompensatedSum<double> st, rem;
  for (std::size_t m = 1; m <= M; ++m) {
    const double j = table.zero(m);
    const double r = j * x;
    st += cos_shifted(r) * std::pow(j, alpha - 0.5);
    const double R = r >= 1.0 ? j0_asymptotic_parts(r, cfg).remainder : j0_remainder(r, cfg);
    rem += std::pow(j, alpha) * R;
  }
  DecompositionEval d;
  d.x = x;
  d.s_tilde = st.value();
  d.remainder_sum = std::pow(x, alpha + 1.0) * rem.value();
  d.leading_combined = std::sqrt(2.0 / kPi) * std::pow(x, alpha + 0.5) * d.s_tilde;
  return d;
}

std::pair<double, double> oscillatory_gh(double y, double alpha, const QuadratureConfig& cfg) {
  if (!(alpha < 0.5)) throw RangeError("oscillatory_gh: alpha must be < 1/2");
  if (!(alpha >= 0.0)) throw DomainError("oscillatory_gh: alpha must be >= 0");
  if (!(y >= 0.0) || !std::isfinite(y)) throw DomainError("oscillatory_gh: y must be finite and >= 0");
  if (y == 0.0) return {0.0, 0.0};
  // Breaks at multiples of pi/2 so every panel sees a quarter period at most.
  std::vector<double> breaks{0.0};
  for (double b = kPi / 2; b < y; b += kPi / 2) breaks.push_back(b);
  breaks.push_back(y);
  const double p = alpha - 0.5;
  const auto g = integrate_panels([p](double v) { return std::cos(v) * std::pow(v, p); }, breaks, p, 1.0, cfg);
  const auto h = integrate_panels([p](double v) { return std::sin(v) * std::pow(v, p); }, breaks, p + 1.0, 1.0, cfg);
  return {g.value, h.value};
}

double sum_integral_gap(double alpha, std::size_t M, double x, const ZeroTable& table,
                        const QuadratureConfig& cfg) {
  if (!(alpha < 0.5)) throw RangeError("sum_integral_gap: alpha must be < 1/2");
  const DecompositionEval d = eval_decomposition(alpha, M, x, table);
  const double upper = table.zero(M) + kPi / 2;
  // u = v/x turns the integral into x^{-alpha-1/2} (G + H)/sqrt(2) at v = upper x.
  const auto [G, H] = oscillatory_gh(upper * x, alpha, cfg);
  const double integral = std::pow(x, -alpha - 0.5) * (G + H) / std::numbers::sqrt2;
  return d.s_tilde - (x / 2.0) / std::sin(kPi * x / 2.0) * integral;
}

double malpha_exp_max(double alpha, double u) {
  if (!(alpha > 0.0) || !(u > 0.0) || !std::isfinite(alpha) || !std::isfinite(u))
    throw DomainError("malpha_exp_max: alpha and u must be positive and finite");
  return std::pow(alpha / (std::numbers::e * u), alpha);
}

std::vector<double> mixed_grid(std::size_t n) {
  if (n < 4) throw DomainError("mixed_grid: need at least 4 points");
  const std::size_t half = n / 2;
  std::vector<double> g;
  g.reserve(2 * half + 1);
  g.push_back(0.0);
  for (std::size_t i = 1; i < half; ++i) g.push_back(static_cast<double>(i) / static_cast<double>(half - 1));
  const double lo = std::log(1e-6);
  for (std::size_t i = 0; i < half; ++i)
    g.push_back(std::exp(lo - lo * static_cast<double>(i) / static_cast<double>(half - 1)));
  g.back() = 1.0;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

}  // namespace bfk
