#pragma once

#include "bfk/quadrature.hpp"
#include "bfk/special_functions.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bfk {

// standard: sum (1 - m/(M+1)) j_m^alpha J0(j_m x)
// even:     same weights on J0(j_{2m} x)
// odd:      same weights on J0(j_{2m+1} x)
// fejer:    trigonometric Fejer kernel F_M(x), alpha ignored
enum class KernelVariant { standard, even, odd, fejer };

std::string to_string(KernelVariant v);
// Throws DomainError on an unknown name.
KernelVariant kernel_variant_from_string(const std::string& s);

struct KernelSpec {
  KernelVariant variant = KernelVariant::standard;
  double alpha = 0.0;
  std::size_t M = 0;

  void validate() const;
  // Number of zeros of J0 the kernel reads (0 for fejer).
  std::size_t zeros_needed() const;
};

struct KernelEval {
  KernelSpec spec;
  std::vector<double> grid;
  std::vector<double> values;
};

// Index of the zero used by the m-th term: m, 2m or 2m+1.
std::size_t mode_index(KernelVariant v, std::size_t m);

// Single point. K_0 = 1 for the Bessel variants.
double kernel_value(const KernelSpec& spec, double x, const ZeroTable& table);

// Grid must be strictly increasing inside [0, 1]. Throws RangeError when the
// table is too short for the requested M, DomainError on a bad grid.
KernelEval eval_kernel(const KernelSpec& spec, std::span<const double> grid, const ZeroTable& table);

// Values of K_M for every M in Ms (any order) at every grid point, computed in
// one pass over m via K_M = A_M - B_M/(M+1) with A_M = sum w J0, B_M = sum m w J0.
// Result is indexed [position in Ms][grid index].
std::vector<std::vector<double>> eval_kernel_family(KernelVariant variant, double alpha,
                                                    std::span<const std::size_t> Ms,
                                                    std::span<const double> grid,
                                                    const ZeroTable& table);

// Upper bound for |d/dx K| on [0, 1]: sum of |weight| * frequency * sup|J1|
// (for fejer, sum of 2 (1 - n/(N+1)) 2 pi n).
double kernel_lipschitz(const KernelSpec& spec, const ZeroTable& table);

// S^alpha_M(x) = sum_{m <= M} j_m^alpha J0(j_m x)
double partial_sum(double alpha, std::size_t M, double x, const ZeroTable& table);

// 1 + 2 sum_{n=1}^N (1 - n/(N+1)) cos(2 pi n x)
double fejer_sum(long N, double x);
// sin^2(pi (N+1) x) / ((N+1) sin^2(pi x)), with the limit N+1 at integers.
// The argument is reduced to the nearest integer first, which keeps full
// relative accuracy next to the peaks.
double fejer_closed_form(long N, double x);

struct DecompositionEval {
  double x = 0.0;
  double s_tilde = 0.0;           // sum cos(j_m x - pi/4) / j_m^{1/2 - alpha}
  double remainder_sum = 0.0;     // x^{alpha+1} sum j_m^alpha R(j_m x)
  double leading_combined = 0.0;  // sqrt(2/pi) x^{alpha+1/2} s_tilde
};

// Requires 0 < x <= 1 (RangeError otherwise) and alpha in [0, 1/2].
DecompositionEval eval_decomposition(double alpha, std::size_t M, double x, const ZeroTable& table,
                                     const BesselEvalConfig& cfg = {});

// G(y) = int_0^y cos(v) v^{alpha-1/2} dv and H(y) = int_0^y sin(v) v^{alpha-1/2} dv.
// Throws RangeError for alpha >= 1/2, DomainError for y < 0 or alpha < 0.
std::pair<double, double> oscillatory_gh(double y, double alpha, const QuadratureConfig& cfg = {});

// S~_M(x) - (x/2)/sin(pi x/2) * int_0^{j_M + pi/2} cos(u x - pi/4) u^{alpha-1/2} du,
// the integral evaluated through G and H at (j_M + pi/2) x.
double sum_integral_gap(double alpha, std::size_t M, double x, const ZeroTable& table,
                        const QuadratureConfig& cfg = {});

// max over real m > 0 of m^alpha e^{-m u} = (alpha/(e u))^alpha.
double malpha_exp_max(double alpha, double u);

// Union of `n/2` uniform points on [0, 1] and `n/2` geometric points from 1e-6
// to 1, plus x = 0; sorted, duplicates removed. Dense near 0 where K peaks.
std::vector<double> mixed_grid(std::size_t n);

}  // namespace bfk
