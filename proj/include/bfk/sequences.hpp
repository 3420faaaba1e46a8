#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bfk {

// Relative tail tolerance: c_L <= c_0 * kTailTol.
inline constexpr double kTailTol = 1e-8;

// Non-negative, decreasing, convex sequence c_0..c_L.
struct ConvexSeq {
  std::vector<double> values;
  std::vector<double> second_diffs;  // c_l + c_{l+2} - 2 c_{l+1}, l = 0..L-2
  std::size_t source_len = 0;        // length of the input it was built from (0 if none)

  // Validates the invariants and fills second_diffs. Convexity and monotonicity
  // are checked up to a few ulp of the entries involved. Throws DomainError
  // naming the first offending index.
  static ConvexSeq from_values(std::vector<double> values, std::size_t source_len = 0);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

// Descriptions of violated ConvexSeq invariants; empty when all hold.
std::vector<std::string> check_convex(std::span<const double> c);

// c_m = r^m for m = 0..L. Throws DomainError if r^L breaks the tail tolerance.
ConvexSeq geometric_seq(double r, std::size_t L);

// Convex decreasing majorant of a on 0..L with c_L = 0 (L >= len(a)).
// b is the decreasing envelope sup_{k >= m} a_k. Two majorants are built and
// the one with the smaller c_0 kept:
//  - backward sweep c_m = max(b_m, 2 c_{m+1} - c_{m+2}), exact on convex input;
//  - c_m = (1/ln 2) sum_{s=m}^{L-1} b_{floor(s/2)}/(s+1), which stays moderate
//    for slowly decaying a (needs L >= 2 len(a)).
// Throws DomainError (with the index) for negative or non-finite entries, or
// when the maximum of a is reached again in its last quarter.
ConvexSeq convexify(std::span<const double> a, std::size_t L);

// sum_{l=0}^{L} (l+1) (c_{l+k} + c_{l+k+2} - 2 c_{l+k+1}); needs k + L + 3
// values. Equals c_k - (L+2) c_{k+L+1} + (L+1) c_{k+L+2}. Throws RangeError.
double telescope_sum(const ConvexSeq& c, std::size_t k, std::size_t L);

// T(m, L) = sum_{l=m}^{L} (l+1-m) second difference at l; 0 for m > L.
// Nondecreasing in L with limit c_m.
double truncated_telescope(const ConvexSeq& c, std::size_t m, std::size_t L);

}  // namespace bfk
