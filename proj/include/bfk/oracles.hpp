#pragma once
// Reference computations for tests and acceptance. Nothing here calls the library's
// evaluation paths, so agreement with the library is an independent check.

#include <cmath>
#include <functional>
#include <numbers>

namespace bfk::oracle {

// J_n(x) = (1/2pi) int_0^{2pi} cos(n t - x sin t) dt with the periodic
// trapezoid rule, which converges spectrally once the node count exceeds x.
inline double bessel_jn_integral(int n, double x) {
  const int nodes = 2 * static_cast<int>(std::ceil(x)) + 96;
  long double sum = 0.0L;
  for (int k = 0; k < nodes; ++k) {
    const long double t = 2.0L * std::numbers::pi_v<long double> * k / nodes;
    sum += std::cos(static_cast<long double>(n) * t - static_cast<long double>(x) * std::sin(t));
  }
  return static_cast<double>(sum / nodes);
}

inline double j0(double x) { return bessel_jn_integral(0, x); }
inline double j1(double x) { return bessel_jn_integral(1, x); }

// Plain bisection of a sign change; used to locate zeros of the oracle J0.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Composite Simpson on a uniform grid; deliberately simple and slow.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  long double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
  return static_cast<double>(s * h / 3.0L);
}

// Golden-section search for the maximum of a unimodal function on [a, b].
inline double golden_max(const std::function<double(double)>& f, double a, double b, int iters = 200) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace bfk::oracle
