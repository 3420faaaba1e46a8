#pragma once

#include "bfk/kernels.hpp"
#include "bfk/quadrature.hpp"
#include "bfk/sequences.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bfk {

// standard:  f_m = j_m^alpha T(m, L)
// even_only: f_{2m} = j_m^alpha T(m, L), odd coefficients vanish
// odd_only:  f_{2m+1} = j_m^alpha T(m, L), even coefficients (and f_1) vanish
enum class ConstructionVariant { standard, even_only, odd_only };

std::string to_string(ConstructionVariant v);
ConstructionVariant construction_variant_from_string(const std::string& s);
KernelVariant kernel_variant_of(ConstructionVariant v);

struct ConstructionSpec {
  double alpha = 0.0;
  ConvexSeq seq;
  std::size_t truncation_L = 1;
  ConstructionVariant variant = ConstructionVariant::standard;

  // alpha in [0, 1/2), L >= 1, len(seq) >= L + 3. Throws DomainError.
  void validate() const;
  std::size_t zeros_needed() const;
};

// f(x) = sum_{l=1}^{L} (l+1) (second difference of c at l) K_l(x), stored
// after reordering as sum_m w_m J0(freq_m x) with w_m = j_m^alpha T(m, L).
struct ConstructedFunction {
  ConstructionSpec spec;
  std::vector<double> weights;  // w_1..w_L (index 0 unused)
  std::vector<double> freqs;    // j_m, j_{2m} or j_{2m+1}
  double weighted_l1 = 0.0;     // int_0^1 |f| x^{alpha+1} dx
  double weighted_l1_error = 0.0;

  double evaluate(double x) const;
  // Highest frequency present, for quadrature panel layout.
  double bandwidth() const { return freqs.empty() ? 0.0 : freqs.back(); }
  // References *this; keep the object alive while the integrand is in use.
  Integrand integrand() const;
};

// Looser tolerances than the default: |f| has kinks where f changes sign.
QuadratureConfig weighted_norm_config();

// Throws RangeError if the table is too short, DomainError on a bad spec.
ConstructedFunction build_f(const ConstructionSpec& spec, const ZeroTable& table,
                            const QuadratureConfig& norm_cfg = weighted_norm_config());

// The unreordered double sum over l of kernel values; O(L^2) per point.
double evaluate_direct(const ConstructionSpec& spec, double x, const ZeroTable& table);

// The coefficient the construction predicts for index n.
double expected_coefficient(const ConstructionSpec& spec, std::size_t n, const ZeroTable& table);

// Quadrature coefficients of f for m in [m_first, m_last], normalized by j_m^alpha.
CoeffReport coefficients_of_f(const ConstructedFunction& f, std::size_t m_first, std::size_t m_last,
                              const ZeroTable& table, const QuadratureConfig& cfg = {});

// int_0^1 |K| x^{power} dx for a Bessel kernel.
QuadEstimate kernel_weighted_l1(const KernelSpec& spec, double power, const ZeroTable& table,
                                const QuadratureConfig& cfg = weighted_norm_config());

struct DecayReport {
  double s = 0.0;
  std::vector<std::size_t> m;
  std::vector<double> j;
  std::vector<double> coeff;  // f_m
  std::vector<double> ratio;  // f_m / j_m^{1/2+s}
  double loglog_slope = 0.0;  // least-squares slope of log|ratio| against log j
  double first_quartile_mean = 0.0;  // mean of |ratio| over the first quarter of the range
  double last_quartile_mean = 0.0;
  bool decaying = false;  // last_quartile_mean < first_quartile_mean
};

// Tracks f_m / j_m^{1/2+s}; s must lie in [0, 1/2].
DecayReport decay_experiment(double s, const Integrand& f, std::size_t m_first, std::size_t m_last,
                             const ZeroTable& table, const QuadratureConfig& cfg = {});

}  // namespace bfk
