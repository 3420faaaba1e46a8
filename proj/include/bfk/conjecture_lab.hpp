#pragma once

#include "bfk/kernels.hpp"
#include "bfk/quadrature.hpp"
#include "bfk/special_functions.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace bfk {

enum class ScanTarget { kernel_positivity, lower_bound_constant, j1_monotone, g_minima, divergence_sum, sqrtx_norms };
enum class Verdict { holds_on_grid, violated, inconclusive };

std::string to_string(ScanTarget t);
std::string to_string(Verdict v);
ScanTarget scan_target_from_string(const std::string& s);

struct ScanRecord {
  std::map<std::string, double> params;
  double value = 0.0;  // extremal value (or the tracked quantity)
  double arg = 0.0;    // where it is attained, when that makes sense
};

struct ScanReport {
  ScanTarget target = ScanTarget::kernel_positivity;
  std::map<std::string, double> parameters;
  std::vector<ScanRecord> records;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> violations;
  std::map<std::string, double> summary;
};

// Minimum of K^alpha_M over mixed_grid(grid_density) for every M, then
// golden-section refinement of each minimum between its grid neighbours.
// Record: params {M, grid_min, grid_arg, slack, eval_tol}, value = refined min,
// arg = refined argmin. slack = Lipschitz bound * largest spacing / 2, so the
// true minimum is >= grid_min - slack. eval_tol = 1e-12 * sum of |weights|.
// Verdict: violated if some refined min < -eval_tol (a point where K < 0 beyond
// evaluation error); holds_on_grid if every grid min >= -eval_tol.
ScanReport scan_positivity(double alpha, std::span<const std::size_t> Ms, std::size_t grid_density,
                           const ZeroTable& table, KernelVariant variant = KernelVariant::standard);

// Minimum of x^{alpha+1} K^alpha_M over the grid (refined as above) per M, and
// the running infimum -C over the sorted M list. Holds when the running inf
// moves by at most 1% (+1e-12) across the last doubling of M and every record
// satisfies min x^{alpha+1}K >= min(min K, 0). No stabilisation is reported as
// inconclusive; a failed consistency check as violated. alpha < 1/2.
ScanReport scan_lower_bound(double alpha, std::span<const std::size_t> Ms, std::size_t grid_density,
                            const ZeroTable& table, KernelVariant variant = KernelVariant::standard);

// Signs of J1(j_m) equal (-1)^{m+1}, |J1(j_m)| strictly decreasing, and
// sqrt(j_m)|J1(j_m)| within 1e-3 of sqrt(2/pi) at m = M_max.
ScanReport scan_j1_behavior(std::size_t M_max, const ZeroTable& table);

// sum_{m<=M} (1 - m/(M+1)) J1(j_m)/sqrt(j_m), exact from the table. Holds when
// every value lies in [0, J1(j_1)/sqrt(j_1)], the alternating-series envelope.
ScanReport alpha_half_norm_sum(std::span<const std::size_t> Ms, const ZeroTable& table);

// G at its local minima y_k = 3 pi/2 + 2 pi k, k = 0..k_max; holds if nondecreasing.
ScanReport scan_g_minima(double alpha, std::size_t k_max, const QuadratureConfig& cfg = {});

// Partial sums of g_{2m+1} |J1(j_{2m+1})| / j_{2m+1} with g = sqrt(j)/log(m+2)
// for M = 1..M_max, compared with sum 1/(m log(2m+1)). Zeros past the table
// come from McMahon's expansion; the first such index is reported as
// parameters["mcmahon_from"]. Records every `stride`-th M. Holds if the sums
// strictly increase and the ratio stays in [kappa/2, 2 kappa] for M >= 100,
// kappa = sqrt(2/pi)/(2 pi) being its limit.
ScanReport divergence_sum(std::size_t M_max, const ZeroTable& table, std::size_t stride = 100);

// Asymptotic limit of the divergence-sum ratio.
double divergence_ratio_limit();

// Per-m pieces of j_m^{alpha-3/2} int_0^{j_m} J0(y) sqrt(y) dy:
//   P1 = j_m^{alpha-3/2} int_0^1 J0 sqrt(y) dy
//   P2 = j_m^{alpha-3/2} sqrt(2/pi) (sin(j_m - pi/4) - sin(1 - pi/4))
//   P3 = j_m^{alpha-3/2} int_1^{j_m} sqrt(y) R(y) dy
struct SqrtxPieces {
  std::size_t m = 0;
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;
  double total = 0.0;  // j_m^alpha int_0^1 J0(j_m x) sqrt(x) dx by cumulative quadrature
};

std::vector<SqrtxPieces> sqrtx_pieces(double alpha, std::size_t m_max, const ZeroTable& table,
                                      const QuadratureConfig& cfg = {});

// int_0^1 K^alpha_M sqrt(x) dx for every M, plus the pieces. Constants are
// fitted as the max of |P_k| m^{3/2-alpha} (P3 also divided by max(1, log m))
// over m <= max(M)/4 and checked on the remaining m. The uniform bound is
// sum_{m<=max M} |total_m| plus the tail of the fitted envelope past max M.
// Holds if the pieces recombine within 1e-10, the fitted bounds hold, and every
// norm lies below the uniform bound.
ScanReport scan_sqrtx_norms(double alpha, std::span<const std::size_t> Ms, const ZeroTable& table,
                            const QuadratureConfig& cfg = {});

// Golden-section minimisation of f on [a, b].
struct Minimum {
  double x = 0.0;
  double value = 0.0;
};
Minimum golden_min(const std::function<double(double)>& f, double a, double b, int iters = 120);

}  // namespace bfk
