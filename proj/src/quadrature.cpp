#include "bfk/quadrature.hpp"

#include "bfk/errors.hpp"
#include "bfk/parallel.hpp"
#include "bfk/summation.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace bfk {

namespace {

constexpr double kPi = std::numbers::pi;

GaussRule build_gauss_legendre(int n) {
  using ld = long double;
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    ld x = std::cos(std::numbers::pi_v<ld> * (i + 0.75L) / (n + 0.5L));
    ld dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      ld p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const ld pk = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0L;
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const ld dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    const ld w = 2.0L / ((1.0L - x * x) * dp * dp);
    rule.nodes[i] = -static_cast<double>(x);
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

bool is_smooth_exponent(double gamma) {
  return gamma >= 0.0 && std::abs(gamma - std::round(gamma)) < 1e-12;
}

// Sum of rule applied to g on [a, b].
void accumulate_panel(const std::function<double(double)>& g, double a, double b,
                      const GaussRule& rule, CompensatedSum<double>& acc) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += half * rule.weights[i] * g(mid + half * rule.nodes[i]);
}

double integrate_layout(const std::function<double(double)>& g, std::span<const double> breaks,
                        bool graded, double q, double bandwidth, int factor, const GaussRule& rule) {
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (!(b > a)) continue;
    const long oscillations = std::max(1L, static_cast<long>(std::ceil((b - a) * bandwidth / kPi)));
    if (i == 0 && graded) {
      // x = b s^q on s in [0, 1]; the Jacobian b q s^{q-1} absorbs the endpoint behaviour.
      const long pieces = std::max(4L, static_cast<long>(std::ceil(q)) * oscillations) * factor;
      auto mapped = [&](double s) {
        const double sq1 = std::pow(s, q - 1.0);
        return g(b * sq1 * s) * b * q * sq1;
      };
      for (long k = 0; k < pieces; ++k)
        accumulate_panel(mapped, static_cast<double>(k) / pieces,
                         static_cast<double>(k + 1) / pieces, rule, acc);
    } else {
      const long pieces = oscillations * factor;
      const double h = (b - a) / pieces;
      for (long k = 0; k < pieces; ++k) {
        const double lo = a + k * h;
        const double hi = (k + 1 == pieces) ? b : a + (k + 1) * h;
        accumulate_panel(g, lo, hi, rule, acc);
      }
    }
  }
  return acc.value();
}

}  // namespace

void QuadratureConfig::validate() const {
  if (gauss_order < 4) throw DomainError("QuadratureConfig: gauss_order must be >= 4");
  if (panels_per_oscillation < 1)
    throw DomainError("QuadratureConfig: panels_per_oscillation must be >= 1");
  if (!(singularity_grading > 0.0 && singularity_grading <= 1.0))
    throw DomainError("QuadratureConfig: singularity_grading must lie in (0, 1]");
  if (!(rel_tol >= 0.0) || !(abs_tol >= 0.0) || (rel_tol == 0.0 && abs_tol == 0.0))
    throw DomainError("QuadratureConfig: tolerances must be non-negative and not both zero");
  if (max_refinements < 0) throw DomainError("QuadratureConfig: max_refinements must be >= 0");
}

Integrand Integrand::zero() { return {[](double) { return 0.0; }, 0.0, 0.0}; }

Integrand Integrand::constant(double c) { return {[c](double) { return c; }, 0.0, 0.0}; }

Integrand Integrand::power(double exponent) {
  return {[exponent](double x) { return std::pow(x, exponent); }, exponent < 0.0 ? -exponent : 0.0,
          0.0};
}

Integrand Integrand::bessel_mode(double j) {
  return {[j](double x) { return bessel_j0(j * x); }, 0.0, j};
}

const GaussRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(build_gauss_legendre(n));
  return *slot;
}

QuadEstimate integrate_panels(const std::function<double(double)>& g,
                              std::span<const double> breaks, double endpoint_exponent,
                              double bandwidth, const QuadratureConfig& cfg) {
  cfg.validate();
  if (breaks.size() < 2) return {};
  if (!(endpoint_exponent > -1.0) && breaks.front() == 0.0)
    throw DomainError("integrate_panels: endpoint behaviour x^gamma with gamma <= -1 is not integrable");
  const bool graded = breaks.front() == 0.0 && !is_smooth_exponent(endpoint_exponent);
  // The graded map turns x^gamma into s^{q(gamma+1)-1}; keep that exponent >= 1.
  const double q = std::max(1.0 / cfg.singularity_grading, 2.0 / (endpoint_exponent + 1.0));
  const GaussRule& low = gauss_legendre(cfg.gauss_order);
  const GaussRule& high = gauss_legendre(2 * cfg.gauss_order);

  QuadEstimate est;
  for (int r = 0; r <= cfg.max_refinements; ++r) {
    const int factor = cfg.panels_per_oscillation << r;
    const double coarse = integrate_layout(g, breaks, graded, q, bandwidth, factor, low);
    const double fine = integrate_layout(g, breaks, graded, q, bandwidth, factor, high);
    if (!std::isfinite(coarse) || !std::isfinite(fine))
      throw DomainError("integrate_panels: integrand is not finite on the integration range");
    est = {fine, std::abs(fine - coarse)};
    if (est.error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(fine))) return est;
  }
  std::ostringstream os;
  os << "integrate_panels: tolerance not reached after " << cfg.max_refinements
     << " refinements (estimate " << est.error << ")";
  throw AccuracyError(os.str(), est.error);
}

QuadEstimate integrate_moment(const Integrand& f, double weight_power, const QuadratureConfig& cfg) {
  if (!(weight_power >= 0.0)) throw DomainError("integrate_moment: weight_power must be >= 0");
  const double breaks[] = {0.0, 1.0};
  auto g = [&](double x) { return f.f(x) * std::pow(x, weight_power); };
  return integrate_panels(g, breaks, weight_power - f.singular_exponent, f.bandwidth, cfg);
}

QuadEstimate integrate_weighted(const Integrand& f, double weight_power, std::size_t m,
                                const ZeroTable& table, const QuadratureConfig& cfg) {
  if (!(weight_power >= 0.0)) throw DomainError("integrate_weighted: weight_power must be >= 0");
  if (!(weight_power - f.singular_exponent > -1.0))
    throw DomainError("integrate_weighted: singularity x^-beta with weight_power - beta <= -1");
  table.require(m, "integrate_weighted");
  const double jm = table.zero(m);
  std::vector<double> breaks;
  breaks.reserve(m + 1);
  breaks.push_back(0.0);
  for (std::size_t k = 1; k < m; ++k) breaks.push_back(table.zero(k) / jm);
  breaks.push_back(1.0);
  const bool integer_power = is_smooth_exponent(weight_power);
  auto g = [&](double x) {
    const double w = integer_power ? std::pow(x, static_cast<int>(std::round(weight_power)))
                                   : std::pow(x, weight_power);
    return f.f(x) * bessel_j0(jm * x) * w;
  };
  return integrate_panels(g, breaks, weight_power - f.singular_exponent, f.bandwidth + jm, cfg);
}

CoeffReport bf_coefficients(const Integrand& f, std::size_t m_first, std::size_t m_last,
                            double alpha, const ZeroTable& table, const QuadratureConfig& cfg) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw DomainError("bf_coefficients: alpha must lie in [0, 1/2]");
  if (m_first < 1 || m_last < m_first) throw RangeError("bf_coefficients: empty or invalid m range");
  table.require(m_last, "bf_coefficients");
  CoeffReport report;
  report.alpha = alpha;
  report.entries.resize(m_last - m_first + 1);
  parallel_for(report.entries.size(), [&](std::size_t i) {
    const std::size_t m = m_first + i;
    const double jm = table.zero(m);
    const double j1 = table.j1_at_zero(m);
    const double scale = 2.0 / (j1 * j1);
    const QuadEstimate q = integrate_weighted(f, 1.0, m, table, cfg);
    CoeffEntry& e = report.entries[i];
    e.m = m;
    e.j_m = jm;
    e.f_m = scale * q.value;
    e.normalized = e.f_m / std::pow(jm, alpha);
    e.error = scale * q.error;
  });
  return report;
}

}  // namespace bfk
