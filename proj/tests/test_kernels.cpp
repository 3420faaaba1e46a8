#include "doctest.h"
#include "bfk/oracles.hpp"

#include "bfk/errors.hpp"
#include "bfk/kernels.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace bfk;

namespace {

constexpr double kPi = std::numbers::pi;

const ZeroTable& table() {
  static const ZeroTable t = compute_zero_table(1000);
  return t;
}

// Zeros located from the oracle J0 alone.
std::vector<double> oracle_zeros(int n) {
  std::vector<double> z;
  for (int m = 1; m <= n; ++m) {
    const double c = kPi * m - kPi / 4;
    z.push_back(oracle::bisect([](double x) { return oracle::j0(x); }, c - 0.5, c + 0.5));
  }
  return z;
}

double oracle_kernel(const std::vector<double>& z, double alpha, int M, double x, int stride, int offset) {
  double s = 0.0;
  for (int m = 1; m <= M; ++m)
    s += (1.0 - m / (M + 1.0)) * std::pow(z[m - 1], alpha) * oracle::j0(z[stride * m + offset - 1] * x);
  return s;
}

}  // namespace

TEST_CASE("eval_kernel examples") {
  const std::vector<double> grid = {0.0, 0.1, 0.5, 1.0};
  SUBCASE("K_0 is identically one") {
    const auto k = eval_kernel({KernelVariant::standard, 0.3, 0}, grid, table());
    for (double v : k.values) CHECK(v == 1.0);
  }
  SUBCASE("x = 0 gives the sum of the weights") {
    for (std::size_t M : {1u, 7u, 40u}) {
      double w = 0.0;
      for (std::size_t m = 1; m <= M; ++m) w += (1.0 - m / (M + 1.0)) * std::pow(table().zero(m), 0.5);
      CHECK(kernel_value({KernelVariant::standard, 0.5, M}, 0.0, table()) == doctest::Approx(w).epsilon(1e-14));
    }
  }
  SUBCASE("fejer at x = 0 is N + 1") {
    for (std::size_t N : {0u, 1u, 5u, 200u}) {
      const auto k = eval_kernel({KernelVariant::fejer, 0.0, N}, grid, table());
      CHECK(k.values[0] == static_cast<double>(N + 1));
    }
  }
}

TEST_CASE("eval_kernel agrees with an oracle sum built from oracle zeros") {
  const auto z = oracle_zeros(25);
  for (double x : {0.03, 0.31, 0.77, 0.97}) {
    CHECK(std::abs(kernel_value({KernelVariant::standard, 0.5, 10}, x, table()) -
                   oracle_kernel(z, 0.5, 10, x, 1, 0)) <= 1e-11);
    CHECK(std::abs(kernel_value({KernelVariant::even, 0.25, 10}, x, table()) -
                   oracle_kernel(z, 0.25, 10, x, 2, 0)) <= 1e-11);
    CHECK(std::abs(kernel_value({KernelVariant::odd, 0.0, 12}, x, table()) -
                   oracle_kernel(z, 0.0, 12, x, 2, 1)) <= 1e-11);
  }
}

TEST_CASE("K^{1/2}_10 dips below zero left of x = 1") {
  // 30-digit reference value computed independently.
  CHECK(std::abs(kernel_value({KernelVariant::standard, 0.5, 10}, 0.972194439, table()) -
                 (-0.00458259980585780245)) <= 1e-13);
  CHECK(std::abs(kernel_value({KernelVariant::standard, 0.5, 10}, 1.0, table())) <= 1e-13);
}

TEST_CASE("eval_kernel error paths") {
  const auto small = compute_zero_table(10);
  const std::vector<double> grid = {0.0, 0.5};
  CHECK_THROWS_AS(eval_kernel({KernelVariant::standard, 0.0, 11}, grid, small), RangeError);
  CHECK_THROWS_AS(eval_kernel({KernelVariant::even, 0.0, 6}, grid, small), RangeError);
  CHECK_NOTHROW(eval_kernel({KernelVariant::even, 0.0, 5}, grid, small));
  CHECK_THROWS_AS(eval_kernel({KernelVariant::odd, 0.0, 5}, grid, small), RangeError);
  CHECK_THROWS_AS(eval_kernel({KernelVariant::standard, 0.6, 1}, grid, small), DomainError);
  const std::vector<double> unsorted = {0.5, 0.2};
  CHECK_THROWS_AS(eval_kernel({KernelVariant::standard, 0.0, 1}, unsorted, small), DomainError);
  const std::vector<double> outside = {0.5, 1.5};
  CHECK_THROWS_AS(eval_kernel({KernelVariant::standard, 0.0, 1}, outside, small), DomainError);
}

TEST_CASE("Cesaro identity: K_M = (1/(M+1)) sum_{m<=M} S_m") {
  for (std::size_t M : {1u, 5u, 30u}) {
    for (double x : {0.0, 0.2, 0.9}) {
      double s = 0.0;
      for (std::size_t m = 1; m <= M; ++m) s += partial_sum(0.4, m, x, table());
      const double k = kernel_value({KernelVariant::standard, 0.4, M}, x, table());
      CHECK(std::abs(k - s / (M + 1.0)) <= 1e-12 * (1.0 + std::abs(s)));
    }
  }
}

TEST_CASE("one-pass family evaluation matches per-M evaluation") {
  const auto grid = mixed_grid(300);
  const std::vector<std::size_t> Ms = {40, 0, 3, 17, 3};
  for (auto v : {KernelVariant::standard, KernelVariant::even}) {
    const auto fam = eval_kernel_family(v, 0.5, Ms, grid, table());
    for (std::size_t k = 0; k < Ms.size(); ++k) {
      const auto direct = eval_kernel({v, 0.5, Ms[k]}, grid, table());
      for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(std::abs(fam[k][i] - direct.values[i]) <= 1e-12 * (1.0 + std::abs(direct.values[0])));
    }
  }
}

TEST_CASE("even kernel has no odd modes and nothing beyond 2M") {
  const std::size_t M = 5;
  const double alpha = 0.3;
  const KernelSpec spec{KernelVariant::even, alpha, M};
  Integrand f{[&](double x) { return kernel_value(spec, x, table()); }, 0.0, table().zero(2 * M)};
  const auto rep = bf_coefficients(f, 1, 2 * M + 4, alpha, table());
  for (const auto& e : rep.entries) {
    const double expected =
        (e.m % 2 == 0 && e.m <= 2 * M) ? (1.0 - (e.m / 2) / (M + 1.0)) * std::pow(table().zero(e.m / 2), alpha) : 0.0;
    CHECK(std::abs(e.f_m - expected) <= 1e-11 * 2.0 / std::pow(table().j1_at_zero(e.m), 2));
  }
}

TEST_CASE("fejer closed form") {
  CHECK(fejer_closed_form(3, 0.0) == 4.0);
  CHECK(fejer_closed_form(3, 1.0) == 4.0);
  CHECK(std::abs(fejer_closed_form(1, 0.5)) <= 1e-15);
  CHECK_THROWS_AS(fejer_closed_form(-1, 0.3), DomainError);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> nd(0, 200);
  std::uniform_real_distribution<double> xd(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const long N = nd(rng);
    const double x = xd(rng);
    CHECK(std::abs(fejer_sum(N, x) - fejer_closed_form(N, x)) <= 1e-10);
  }
  // Right next to the peaks the closed form keeps its accuracy.
  for (double x : {1e-12, 1.0 - 1e-12, 1e-7, 0.5 + 1e-9})
    CHECK(std::abs(fejer_sum(150, x) - fejer_closed_form(150, x)) <= 1e-10);
}

TEST_CASE("F_N is non-negative with unit mass") {
  for (long N : {0L, 1L, 7L, 64L, 200L}) {
    // The periodic trapezoid rule with more than N nodes is exact for F_N.
    const int nodes = 2 * static_cast<int>(N) + 5;
    long double mass = 0.0L;
    for (int k = 0; k < nodes; ++k) {
      const double v = fejer_closed_form(N, static_cast<double>(k) / nodes);
      CHECK(v >= 0.0);
      mass += v;
    }
    CHECK(std::abs(static_cast<double>(mass / nodes) - 1.0) <= 1e-12);
    for (int k = 0; k <= 2000; ++k) CHECK(fejer_closed_form(N, k / 2000.0) >= 0.0);
  }
}

TEST_CASE("eval_decomposition") {
  SUBCASE("identity with the partial sum on random samples") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ad(0.0, 0.5), xd(1e-4, 1.0);
    std::uniform_int_distribution<std::size_t> md(1, 200);
    for (int i = 0; i < 60; ++i) {
      const double a = ad(rng), x = xd(rng);
      const std::size_t M = md(rng);
      const auto d = eval_decomposition(a, M, x, table());
      const double target = std::pow(x, a + 1.0) * partial_sum(a, M, x, table());
      CHECK(std::abs(d.leading_combined + d.remainder_sum - target) <= M * 1e-11);
    }
  }
  SUBCASE("x = 0 is a range error") {
    CHECK_THROWS_AS(eval_decomposition(0.25, 10, 0.0, table()), RangeError);
  }
  SUBCASE("remainder sum is uniformly small at alpha = 0.4") {
    double sup100 = 0.0, sup200 = 0.0;
    for (int i = 1; i <= 400; ++i) {
      const double x = i / 400.0;
      sup100 = std::max(sup100, std::abs(eval_decomposition(0.4, 100, x, table()).remainder_sum));
      sup200 = std::max(sup200, std::abs(eval_decomposition(0.4, 200, x, table()).remainder_sum));
    }
    CHECK(sup100 <= 0.1);
    CHECK(sup200 <= 0.1);
  }
}

TEST_CASE("sum-vs-integral gap stays bounded in M") {
  double first = 0.0, second = 0.0;
  for (std::size_t M : {20u, 60u, 120u, 250u, 380u, 500u}) {
    double sup = 0.0;
    for (int i = 1; i <= 40; ++i) sup = std::max(sup, std::abs(sum_integral_gap(0.25, M, i / 40.0, table())));
    sup = std::max(sup, std::abs(sum_integral_gap(0.25, M, 1e-3, table())));
    (M <= 250 ? first : second) = std::max(M <= 250 ? first : second, sup);
  }
  CHECK(first <= 1.0);
  CHECK(second <= 1.05 * first);
}

TEST_CASE("oscillatory_gh") {
  CHECK(oscillatory_gh(0.0, 0.2) == std::pair{0.0, 0.0});
  CHECK_THROWS_AS(oscillatory_gh(1.0, 0.5), RangeError);
  CHECK_THROWS_AS(oscillatory_gh(-1.0, 0.2), DomainError);

  // High-precision reference values at y = 3 pi / 2.
  auto [g0, h0] = oscillatory_gh(1.5 * kPi, 0.0);
  CHECK(std::abs(g0 - 0.8047685146021998342) <= 1e-10);
  CHECK(std::abs(h0 - 1.2966916450748012212) <= 1e-10);
  auto [g1, h1] = oscillatory_gh(1.5 * kPi, 0.25);
  CHECK(std::abs(g1 - (-0.2020667440480981364)) <= 1e-10);
  CHECK(std::abs(h1 - 1.1649797454062189028) <= 1e-10);
  CHECK(std::abs(oscillatory_gh(60.0, 0.25).first - 0.3608611961728333402) <= 1e-10);

  // v = t^2 removes the singularity; plain Simpson is then an independent check.
  const double y = 17.3;
  const double simpson = oracle::simpson([](double t) { return 2.0 * std::cos(t * t); }, 0.0, std::sqrt(y), 20000);
  CHECK(std::abs(oscillatory_gh(y, 0.0).first - simpson) <= 1e-9);

  SUBCASE("local minima of G increase") {
    for (double a : {0.0, 0.25, 0.4}) {
      double prev = oscillatory_gh(1.5 * kPi, a).first;
      for (int k = 1; k <= 51; ++k) {
        const double cur = oscillatory_gh(1.5 * kPi + 2.0 * kPi * k, a).first;
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  }
  SUBCASE("range of G on [0, 500] is finite and stable under refinement") {
    QuadratureConfig fine;
    fine.gauss_order = 32;
    double lo = 1e300, hi = -1e300, lo2 = 1e300, hi2 = -1e300;
    for (int i = 1; i <= 1000; ++i) {
      const double y = 0.5 * i;
      const double g = oscillatory_gh(y, 0.0).first, g2 = oscillatory_gh(y, 0.0, fine).first;
      lo = std::min(lo, g), hi = std::max(hi, g);
      lo2 = std::min(lo2, g2), hi2 = std::max(hi2, g2);
    }
    CHECK(hi - lo < 2.0);
    CHECK(std::abs((hi - lo) - (hi2 - lo2)) <= 1e-9);
  }
}

TEST_CASE("malpha_exp_max") {
  CHECK(malpha_exp_max(1.0, 1.0) == doctest::Approx(1.0 / std::numbers::e).epsilon(1e-15));
  const double golden = oracle::golden_max([](double y) { return y * std::exp(-y); }, 1e-9, 100.0);
  CHECK(std::abs(malpha_exp_max(1.0, 1.0) - golden) <= 1e-9);
  CHECK_THROWS_AS(malpha_exp_max(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(malpha_exp_max(1.0, -1.0), DomainError);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ad(0.05, 3.0), ud(0.01, 2.0);
  for (int i = 0; i < 20; ++i) {
    const double a = ad(rng), u = ud(rng);
    const double bound = malpha_exp_max(a, u);
    for (int m = 1; m <= 10000; m += 37) CHECK(std::pow(m, a) * std::exp(-m * u) <= bound * (1 + 1e-14));
  }
}

TEST_CASE("mixed_grid") {
  const auto g = mixed_grid(10000);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g.size() > 9900);
  CHECK(g[1] <= 1e-6 * (1 + 1e-12));
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  CHECK_THROWS_AS(mixed_grid(2), DomainError);
}
