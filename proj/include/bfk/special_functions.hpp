#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bfk {

// Controls the J0/J1 evaluation split: power series (summed in extended
// precision) below series_cutoff, Hankel asymptotic expansion above it.
struct BesselEvalConfig {
  double series_cutoff = 14.0;
  int asymptotic_terms = 15;
  double target_abs_error = 1e-12;

  void validate() const;
};

// Largest |J1(x)| over x >= 0, attained near x = 1.8412.
inline constexpr double kJ1Sup = 0.58186522428865;

double bessel_j0(double x, const BesselEvalConfig& cfg = {});
double bessel_j1(double x, const BesselEvalConfig& cfg = {});

// Leading Hankel term sqrt(2/pi) cos(r - pi/4) / sqrt(r), valid for any r > 0.
double j0_leading(double r);

// R(r) = J0(r) - j0_leading(r), defined for every r > 0. Unlike
// j0_asymptotic_parts this does not certify a bound and accepts r < 1.
double j0_remainder(double r, const BesselEvalConfig& cfg = {});

struct AsymptoticParts {
  double leading = 0.0;
  double remainder = 0.0;
  // Explicit majorant of |R(r)| for r >= 1 from the first neglected Hankel
  // terms: sqrt(2/(pi r)) (1/(8r) + 9/(128 r^2)) <= 0.157 r^{-3/2}.
  double remainder_bound = 0.0;
  // int_0^2 e^{-rt} sqrt(t) dt + int_2^inf e^{-rt}/t dt. Bounds |R| only up to
  // an unspecified constant; reported for comparison with remainder_bound.
  double integral_majorant = 0.0;
};

// Throws RangeError for r < 1.
AsymptoticParts j0_asymptotic_parts(double r, const BesselEvalConfig& cfg = {});

// Constant c in remainder_bound <= c r^{-3/2}.
inline constexpr double kRemainderBoundConstant = 0.15584;

// pi m - pi/4 + 1/(8 pi m - 2 pi): the Newton seed for the m-th zero.
double mcmahon_seed(long m);

// McMahon expansion through the (8 beta)^{-5} term; within a few ulp of j_m for m >= 50.
double mcmahon_zero(long m);

// Zeros j_1 < j_2 < ... of J0 with J1(j_m) and certification data. Immutable
// once built. Indexing is 1-based to match the usual j_m notation.
class ZeroTable {
public:
  ZeroTable() = default;
  ZeroTable(std::vector<double> zeros, std::vector<double> j1_at_zeros,
            std::vector<double> residuals);

  std::size_t count() const { return zeros_.size(); }
  double zero(std::size_t m) const;
  double j1_at_zero(std::size_t m) const;
  double residual(std::size_t m) const;
  // j_m - (pi m - pi/4)
  double mcmahon_eps(std::size_t m) const;

  std::span<const double> zeros() const { return zeros_; }
  std::span<const double> j1_at_zeros() const { return j1_; }
  std::span<const double> residuals() const { return residuals_; }

  // Throws RangeError unless 1 <= m <= count().
  void require(std::size_t m, const char* who) const;

  // Returns human-readable descriptions of violated table invariants:
  // strict increase, j_m > m, j_m >= pi m - pi/4, residual <= tol, sign of
  // J1(j_m) equal to (-1)^{m+1}. Empty means certified.
  std::vector<std::string> check(double residual_tol = 1e-12) const;

private:
  std::vector<double> zeros_;
  std::vector<double> j1_;
  std::vector<double> residuals_;
};

// Newton refinement of mcmahon_seed(m) inside the sign bracket
// [seed - pi/2, seed + pi/2], falling back to bisection when a step leaves the
// bracket. Throws ComputationError carrying m if the bracket has no sign change
// or |J0(j_m)| <= 1e-12 cannot be reached.
double refine_zero(long m, const BesselEvalConfig& cfg = {});

ZeroTable compute_zero_table(std::size_t m_max, const BesselEvalConfig& cfg = {});

}  // namespace bfk
