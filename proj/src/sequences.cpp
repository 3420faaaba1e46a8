#include "bfk/sequences.hpp"

#include "bfk/errors.hpp"
#include "bfk/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bfk {

namespace {

constexpr double kUlpSlack = 8.0 * std::numeric_limits<double>::epsilon();

std::vector<double> decreasing_envelope(std::span<const double> a, std::size_t L) {
  std::vector<double> b(L + 1, 0.0);
  double run = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) {
    run = std::max(run, a[i]);
    b[i] = run;
  }
  return b;
}

std::vector<double> sweep_majorant(const std::vector<double>& b, std::size_t L) {
  std::vector<double> c(L + 1, 0.0);
  if (L >= 1) c[L - 1] = b[L - 1];
  for (std::size_t m = L - 1; m-- > 0;) c[m] = std::max(b[m], 2.0 * c[m + 1] - c[m + 2]);
  return c;
}

std::vector<double> dyadic_majorant(const std::vector<double>& b, std::size_t L) {
  std::vector<double> c(L + 1, 0.0);
  CompensatedSum<double> acc;
  for (std::size_t s = L; s-- > 0;) {
    acc += b[s / 2] / (static_cast<double>(s + 1) * std::numbers::ln2);
    c[s] = acc.value();
  }
  return c;
}

bool dominates(const std::vector<double>& c, std::span<const double> a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (c[i] < a[i]) return false;
  return true;
}

}  // namespace

std::vector<std::string> check_convex(std::span<const double> c) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(c[i] >= 0.0) || !std::isfinite(c[i])) v.push_back("c[" + std::to_string(i) + "] negative or not finite");
    if (i + 1 < c.size() && c[i + 1] > c[i]) v.push_back("increase at " + std::to_string(i));
    if (i + 2 < c.size()) {
      const double d2 = c[i] + c[i + 2] - 2.0 * c[i + 1];
      if (d2 < -kUlpSlack * c[i]) v.push_back("negative second difference at " + std::to_string(i));
    }
  }
  if (!c.empty() && c.back() > c.front() * kTailTol) v.push_back("tail above c_0 * tail_tol");
  return v;
}

ConvexSeq ConvexSeq::from_values(std::vector<double> values, std::size_t source_len) {
  const auto bad = check_convex(values);
  if (!bad.empty()) throw DomainError("ConvexSeq: " + bad.front());
  ConvexSeq s;
  s.values = std::move(values);
  s.source_len = source_len;
  const auto& c = s.values;
  for (std::size_t l = 0; l + 2 < c.size(); ++l) s.second_diffs.push_back(c[l] + c[l + 2] - 2.0 * c[l + 1]);
  return s;
}

ConvexSeq geometric_seq(double r, std::size_t L) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("geometric_seq: ratio must lie in [0, 1]");
  std::vector<double> c(L + 1);
  for (std::size_t m = 0; m <= L; ++m) c[m] = std::pow(r, static_cast<double>(m));
  return ConvexSeq::from_values(std::move(c));
}

ConvexSeq convexify(std::span<const double> a, std::size_t L) {
  if (L < a.size() || L < 1) throw DomainError("convexify: L must be >= len(a) and >= 1");
  double top = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] >= 0.0) || !std::isfinite(a[i]))
      throw DomainError("convexify: entry " + std::to_string(i) + " is negative or not finite");
    top = std::max(top, a[i]);
  }
  if (top > 0.0 && a.size() >= 4) {
    const std::size_t tail = a.size() - a.size() / 4;
    for (std::size_t i = tail; i < a.size(); ++i)
      if (a[i] >= top)
        throw DomainError("convexify: sequence does not tend to zero; maximum reached again at index " +
                          std::to_string(i));
  }
  const auto b = decreasing_envelope(a, L);

  std::vector<std::vector<double>> candidates{sweep_majorant(b, L)};
  if (L >= 2 * a.size() + 2) candidates.push_back(dyadic_majorant(b, L));
  const std::vector<double>* best = nullptr;
  for (const auto& c : candidates) {
    if (!dominates(c, a) || !check_convex(c).empty()) continue;
    if (!best || c[0] < (*best)[0]) best = &c;
  }
  if (!best) throw ComputationError("convexify: no candidate passed verification", 0);
  return ConvexSeq::from_values(*best, a.size());
}

double telescope_sum(const ConvexSeq& c, std::size_t k, std::size_t L) {
  if (k + L + 3 > c.size())
    throw RangeError("telescope_sum: needs k + L + 3 = " + std::to_string(k + L + 3) + " values, have " +
                     std::to_string(c.size()));
  CompensatedSum<double> acc;
  for (std::size_t l = 0; l <= L; ++l) acc += static_cast<double>(l + 1) * c.second_diffs[l + k];
  return acc.value();
}

double truncated_telescope(const ConvexSeq& c, std::size_t m, std::size_t L) {
  if (m > L) return 0.0;
  return telescope_sum(c, m, L - m);
}

}  // namespace bfk
