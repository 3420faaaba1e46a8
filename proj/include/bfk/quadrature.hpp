#pragma once

#include "bfk/special_functions.hpp"

#include <functional>
#include <span>
#include <vector>

namespace bfk {

struct QuadratureConfig {
  int gauss_order = 16;
  int panels_per_oscillation = 1;
  // Panels touching x = 0 use the graded map x = b s^{1/grading}.
  double singularity_grading = 0.25;
  double rel_tol = 1e-10;
  double abs_tol = 1e-11;
  // Each refinement doubles the panel count.
  int max_refinements = 8;

  void validate() const;
};

// An integrand on (0, 1] together with what the panel layout needs to know
// about it: its power-law behaviour at the origin and how fast it oscillates.
struct Integrand {
  std::function<double(double)> f;
  double singular_exponent = 0.0;  // f(x) ~ x^{-singular_exponent} as x -> 0+
  double bandwidth = 0.0;          // largest angular frequency present in f

  static Integrand zero();
  static Integrand constant(double c);
  // x^exponent; a negative exponent flags an endpoint singularity.
  static Integrand power(double exponent);
  // J0(j x)
  static Integrand bessel_mode(double j);
};

struct QuadEstimate {
  double value = 0.0;
  double error = 0.0;  // |I(2n) - I(n)|, order-doubling estimate
};

struct GaussRule {
  std::vector<double> nodes;  // on [-1, 1], ascending
  std::vector<double> weights;
};

// Gauss-Legendre rule with n nodes; cached, safe to call concurrently.
const GaussRule& gauss_legendre(int n);

// Integrates g over [breaks.front(), breaks.back()]. Each interval between
// consecutive breakpoints is cut into enough panels to resolve `bandwidth`.
// When breaks.front() == 0 and g ~ x^endpoint_exponent with a non-integer
// exponent, the first interval is integrated on a graded mesh. Panel counts
// double until the order-doubling estimate meets the tolerances.
QuadEstimate integrate_panels(const std::function<double(double)>& g,
                              std::span<const double> breaks, double endpoint_exponent,
                              double bandwidth, const QuadratureConfig& cfg);

// int_0^1 f(x) x^weight_power dx
QuadEstimate integrate_moment(const Integrand& f, double weight_power, const QuadratureConfig& cfg);

// int_0^1 f(x) J0(j_m x) x^weight_power dx, panels split at x = j_k / j_m.
// Throws DomainError if the endpoint behaviour is not integrable and
// AccuracyError if the tolerance is not reached within the panel budget.
QuadEstimate integrate_weighted(const Integrand& f, double weight_power, std::size_t m,
                                const ZeroTable& table, const QuadratureConfig& cfg = {});

struct CoeffEntry {
  std::size_t m = 0;
  double j_m = 0.0;
  double f_m = 0.0;
  double normalized = 0.0;  // f_m / j_m^alpha
  double error = 0.0;       // quadrature estimate scaled by 2 / J1(j_m)^2
};

struct CoeffReport {
  double alpha = 0.0;
  std::vector<CoeffEntry> entries;  // ascending m
};

// f_m = (2 / J1(j_m)^2) int_0^1 f(x) J0(j_m x) x dx for m in [m_first, m_last].
CoeffReport bf_coefficients(const Integrand& f, std::size_t m_first, std::size_t m_last,
                            double alpha, const ZeroTable& table,
                            const QuadratureConfig& cfg = {});

}  // namespace bfk
