#include "bfk/special_functions.hpp"

#include "bfk/errors.hpp"
#include "bfk/summation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace bfk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_argument(double x, const char* who) {
  if (!std::isfinite(x))
    throw DomainError(std::string(who) + ": argument must be finite");
  if (x < 0.0)
    throw DomainError(std::string(who) + ": argument must be non-negative");
}

// sum_k (-1)^k (x^2/4)^k / (k! (k+order)!) times (x/2)^order, in long double.
double power_series(double x, int order) {
  using ld = long double;
  const ld q = static_cast<ld>(x) * static_cast<ld>(x) / 4.0L;
  ld term = order == 0 ? 1.0L : static_cast<ld>(x) / 2.0L;
  CompensatedSum<ld> sum;
  sum += term;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<ld>(k) * static_cast<ld>(k + order));
    sum += term;
    if (std::abs(term) < 1e-22L * std::abs(sum.value()) && k > 2) break;
  }
  return static_cast<double>(sum.value());
}

// Hankel expansion J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi), nu in {0, 1}.
double hankel(double x, int order, int terms) {
  const double mu = 4.0 * order * order;
  double a = 1.0;  // a_k(nu) / x^k, built incrementally
  double p = 0.0, q = 0.0;
  for (int k = 0; k < 2 * terms; ++k) {
    if (k > 0) {
      const double odd = 2.0 * k - 1.0;
      a *= (mu - odd * odd) / (8.0 * k * x);
    }
    // k = 0,1,2,3,... contributes +P, +Q, -P, -Q, ...
    const double signed_a = ((k / 2) % 2 == 0) ? a : -a;
    if (k % 2 == 0)
      p += signed_a;
    else
      q += signed_a;
  }
  const double c = std::cos(x), s = std::sin(x);
  double cos_chi, sin_chi;
  if (order == 0) {  // chi = x - pi/4
    cos_chi = (c + s) * kInvSqrt2;
    sin_chi = (s - c) * kInvSqrt2;
  } else {  // chi = x - 3 pi/4
    cos_chi = (s - c) * kInvSqrt2;
    sin_chi = -(s + c) * kInvSqrt2;
  }
  return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

double evaluate(double x, int order, const BesselEvalConfig& cfg) {
  if (x <= cfg.series_cutoff) return power_series(x, order);
  return hankel(x, order, cfg.asymptotic_terms);
}

}  // namespace

void BesselEvalConfig::validate() const {
  if (!(series_cutoff > 0.0)) throw DomainError("BesselEvalConfig: series_cutoff must be > 0");
  if (asymptotic_terms < 1) throw DomainError("BesselEvalConfig: asymptotic_terms must be >= 1");
  if (!(target_abs_error > 0.0))
    throw DomainError("BesselEvalConfig: target_abs_error must be > 0");
}

double bessel_j0(double x, const BesselEvalConfig& cfg) {
  require_argument(x, "bessel_j0");
  return evaluate(x, 0, cfg);
}

double bessel_j1(double x, const BesselEvalConfig& cfg) {
  require_argument(x, "bessel_j1");
  return evaluate(x, 1, cfg);
}

double j0_leading(double r) {
  const double c = std::cos(r), s = std::sin(r);
  return std::sqrt(2.0 / (kPi * r)) * (c + s) * kInvSqrt2;
}

double j0_remainder(double r, const BesselEvalConfig& cfg) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("j0_remainder: r must be positive and finite");
  return evaluate(r, 0, cfg) - j0_leading(r);
}

AsymptoticParts j0_asymptotic_parts(double r, const BesselEvalConfig& cfg) {
  if (!std::isfinite(r)) throw DomainError("j0_asymptotic_parts: r must be finite");
  if (r < 1.0) throw RangeError("j0_asymptotic_parts: split is only certified for r >= 1");
  AsymptoticParts parts;
  parts.leading = j0_leading(r);
  parts.remainder = evaluate(r, 0, cfg) - parts.leading;
  parts.remainder_bound = std::sqrt(2.0 / (kPi * r)) * (1.0 / (8.0 * r) + 9.0 / (128.0 * r * r));
  // int_0^2 e^{-rt} sqrt(t) dt = r^{-3/2} gamma(3/2, 2r),
  // gamma(3/2, z) = (sqrt(pi)/2) erf(sqrt z) - sqrt(z) e^{-z}.
  const double z = 2.0 * r;
  const double lower_gamma = 0.5 * std::sqrt(kPi) * std::erf(std::sqrt(z)) - std::sqrt(z) * std::exp(-z);
  // int_2^inf e^{-rt}/t dt = E1(2r) = -Ei(-2r)
  parts.integral_majorant = lower_gamma / (r * std::sqrt(r)) - std::expint(-z);
  return parts;
}

double mcmahon_seed(long m) {
  const double md = static_cast<double>(m);
  return kPi * md - kPi / 4.0 + 1.0 / (8.0 * kPi * md - 2.0 * kPi);
}

double mcmahon_zero(long m) {
  const double beta = (static_cast<double>(m) - 0.25) * kPi;
  const double b8 = 8.0 * beta;
  const double b8_2 = b8 * b8;
  return beta + 1.0 / b8 - 124.0 / (3.0 * b8 * b8_2) + 120928.0 / (15.0 * b8 * b8_2 * b8_2);
}

ZeroTable::ZeroTable(std::vector<double> zeros, std::vector<double> j1_at_zeros,
                     std::vector<double> residuals)
    : zeros_(std::move(zeros)), j1_(std::move(j1_at_zeros)), residuals_(std::move(residuals)) {
  if (zeros_.size() != j1_.size() || zeros_.size() != residuals_.size())
    throw DomainError("ZeroTable: column lengths differ");
}

void ZeroTable::require(std::size_t m, const char* who) const {
  if (m < 1 || m > zeros_.size()) {
    std::ostringstream os;
    os << who << ": zero index " << m << " outside table of " << zeros_.size() << " zeros";
    throw RangeError(os.str());
  }
}

double ZeroTable::zero(std::size_t m) const {
  require(m, "ZeroTable::zero");
  return zeros_[m - 1];
}

double ZeroTable::j1_at_zero(std::size_t m) const {
  require(m, "ZeroTable::j1_at_zero");
  return j1_[m - 1];
}

double ZeroTable::residual(std::size_t m) const {
  require(m, "ZeroTable::residual");
  return residuals_[m - 1];
}

double ZeroTable::mcmahon_eps(std::size_t m) const {
  return zero(m) - (kPi * static_cast<double>(m) - kPi / 4.0);
}

std::vector<std::string> ZeroTable::check(double residual_tol) const {
  std::vector<std::string> out;
  auto report = [&](std::size_t m, const std::string& what) {
    std::ostringstream os;
    os << "m=" << m << ": " << what;
    out.push_back(os.str());
  };
  for (std::size_t m = 1; m <= zeros_.size(); ++m) {
    const double j = zeros_[m - 1];
    const double md = static_cast<double>(m);
    if (m > 1 && !(j > zeros_[m - 2])) report(m, "zeros not strictly increasing");
    if (!(j > md)) report(m, "j_m > m violated");
    if (!(j >= kPi * md - kPi / 4.0)) report(m, "j_m >= pi m - pi/4 violated");
    if (!(residuals_[m - 1] <= residual_tol)) report(m, "residual above tolerance");
    const bool positive = j1_[m - 1] > 0.0;
    if (positive != (m % 2 == 1)) report(m, "sign of J1(j_m) is not (-1)^{m+1}");
  }
  return out;
}

double refine_zero(long m, const BesselEvalConfig& cfg) {
  if (m < 1) throw ComputationError("refine_zero: index must be >= 1", m);
  const double seed = mcmahon_seed(m);
  double lo = seed - kPi / 2.0, hi = seed + kPi / 2.0;
  double f_lo = bessel_j0(lo, cfg), f_hi = bessel_j0(hi, cfg);
  if (f_lo * f_hi >= 0.0)
    throw ComputationError("refine_zero: no sign change of J0 around McMahon seed", m);

  double x = seed;
  for (int iter = 0; iter < 100; ++iter) {
    const double f = bessel_j0(x, cfg);
    if (f == 0.0) return x;
    if ((f < 0.0) == (f_lo < 0.0))
      lo = x;
    else
      hi = x;
    // J0' = -J1, so the Newton step is x + J0/J1.
    double next = x + f / bessel_j1(x, cfg);
    if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
  }
  if (!(std::abs(bessel_j0(x, cfg)) <= 1e-12))
    throw ComputationError("refine_zero: residual |J0(j_m)| above 1e-12 after refinement", m);
  return x;
}

ZeroTable compute_zero_table(std::size_t m_max, const BesselEvalConfig& cfg) {
  cfg.validate();
  if (m_max < 1) throw DomainError("compute_zero_table: M_max must be >= 1");
  std::vector<double> zeros(m_max), j1(m_max), residuals(m_max);
  for (std::size_t i = 0; i < m_max; ++i) {
    const double j = refine_zero(static_cast<long>(i + 1), cfg);
    zeros[i] = j;
    j1[i] = bessel_j1(j, cfg);
    residuals[i] = std::abs(bessel_j0(j, cfg));
  }
  return ZeroTable(std::move(zeros), std::move(j1), std::move(residuals));
}

}  // namespace bfk
