#include "doctest.h"
#include "bfk/oracles.hpp"

#include "bfk/errors.hpp"
#include "bfk/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace bfk;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("oracle agrees with high-precision reference values") {
  // 30-digit values, rounded to double.
  CHECK(std::abs(oracle::j0(10.0) - (-0.245935764451348335)) < 1e-15);
  CHECK(std::abs(oracle::j1(10.0) - 0.0434727461688614367) < 1e-15);
  CHECK(std::abs(oracle::j0(50.0) - 0.0558123276692518150) < 1e-15);
}

TEST_CASE("bessel_j0 examples") {
  CHECK(bessel_j0(0.0) == 1.0);

  const double j1_oracle =
      oracle::bisect([](double x) { return oracle::j0(x); }, 2.0, 3.0);
  CHECK(std::abs(j1_oracle - 2.404825557695773) < 1e-14);
  CHECK(std::abs(bessel_j0(2.404825557695773)) <= 1e-12);
  CHECK(std::abs(bessel_j0(10.0) - oracle::j0(10.0)) <= 1e-12);
}

TEST_CASE("bessel_j0 and bessel_j1 reject non-finite or negative input") {
  CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(bessel_j1(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(bessel_j1(-1.0), DomainError);
}

TEST_CASE("BesselEvalConfig validation") {
  BesselEvalConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.asymptotic_terms = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.series_cutoff = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("bessel_j1 examples") {
  CHECK(bessel_j1(0.0) == 0.0);
  const double j1 = compute_zero_table(1).zero(1);
  const double v = bessel_j1(j1);
  CHECK(v > 0.0);
  CHECK(std::abs(v - oracle::j1(j1)) <= 1e-12);
  CHECK(std::abs(v - 0.519147497289466788) <= 1e-12);
}

TEST_CASE("J0' = -J1 by central differences on [1, 20]") {
  const double h = 1e-4;
  for (double x = 1.0; x <= 20.0; x += 0.37) {
    const double fd = -(bessel_j0(x + h) - bessel_j0(x - h)) / (2.0 * h);
    // Truncation error h^2/6 |J0'''| <= h^2/6; rounding 1e-16/h.
    CHECK(std::abs(fd - bessel_j1(x)) <= h * h / 6.0 + 1e-11);
  }
}

TEST_CASE("dense grid agreement with the integral representation on [0, 50]") {
  double worst0 = 0.0, worst1 = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = 50.0 * i / 2000.0;
    worst0 = std::max(worst0, std::abs(bessel_j0(x) - oracle::j0(x)));
    worst1 = std::max(worst1, std::abs(bessel_j1(x) - oracle::j1(x)));
  }
  CHECK(worst0 <= 1e-12);
  CHECK(worst1 <= 1e-12);
}

TEST_CASE("switchover neighbourhood is continuous to target accuracy") {
  const BesselEvalConfig cfg;
  for (double d : {-1e-9, 0.0, 1e-9}) {
    const double x = cfg.series_cutoff + d;
    CHECK(std::abs(bessel_j0(x) - oracle::j0(x)) <= 1e-12);
    CHECK(std::abs(bessel_j1(x) - oracle::j1(x)) <= 1e-12);
  }
}

TEST_CASE("j0_asymptotic_parts") {
  SUBCASE("r = 1 is inside the certified range") {
    const auto p = j0_asymptotic_parts(1.0);
    CHECK(std::abs(p.remainder) <= p.remainder_bound);
  }
  SUBCASE("leading term is the plain formula at r = 10") {
    const auto p = j0_asymptotic_parts(10.0);
    const double expected = std::sqrt(2.0 / kPi) * std::cos(10.0 - kPi / 4.0) / std::sqrt(10.0);
    CHECK(p.leading == doctest::Approx(expected).epsilon(1e-15));
    CHECK(std::abs(p.leading + p.remainder - bessel_j0(10.0)) <= 1e-15);
  }
  SUBCASE("below r = 1 is a range error") {
    CHECK_THROWS_AS(j0_asymptotic_parts(0.5), RangeError);
  }
  SUBCASE("fitted K: |R(r)| <= K r^{-3/2} with K from the oracle") {
    double k_fit = 0.0;
    for (double r = 1.0; r <= 1000.0; r *= 1.013) {
      const double rem = oracle::j0(r) - std::sqrt(2.0 / (kPi * r)) * std::cos(r - kPi / 4.0);
      k_fit = std::max(k_fit, std::abs(rem) * std::pow(r, 1.5));
    }
    CHECK(k_fit < kRemainderBoundConstant);
    const auto p = j0_asymptotic_parts(100.0);
    CHECK(std::abs(p.remainder) <= k_fit * std::pow(100.0, -1.5) * (1 + 1e-6));
  }
  SUBCASE("bound dominates the remainder and decays like r^{-3/2}") {
    double ratio_max = 0.0;
    for (double r = 1.0; r <= 2000.0; r *= 1.007) {
      const auto p = j0_asymptotic_parts(r);
      CHECK(std::abs(p.remainder) <= p.remainder_bound);
      CHECK(p.remainder_bound <= kRemainderBoundConstant * std::pow(r, -1.5));
      ratio_max = std::max(ratio_max, std::abs(p.remainder) / p.integral_majorant);
    }
    // The integral majorant only bounds R up to a constant; that constant is
    // finite on the sampled range.
    CHECK(ratio_max < 10.0);
  }
}

TEST_CASE("compute_zero_table examples") {
  const auto one = compute_zero_table(1);
  CHECK(one.count() == 1);
  const double j1_oracle = oracle::bisect([](double x) { return oracle::j0(x); }, 2.0, 3.0);
  CHECK(std::abs(one.zero(1) - j1_oracle) <= 1e-13);
  CHECK(std::abs(one.zero(1) - 2.404825557695773) <= 1e-14);
  CHECK(one.residual(1) <= 1e-12);

  const auto table = compute_zero_table(1000);
  CHECK(table.check().empty());
  CHECK(std::abs(table.zero(1000) - 3140.80729522507863) <= 1e-10);
  CHECK(std::abs(table.j1_at_zero(1000) - (-0.0142370306084102889)) <= 1e-14);
  for (std::size_t m = 1; m <= 1000; ++m) {
    CHECK(table.zero(m) > static_cast<double>(m));
  }
  SUBCASE("McMahon error law eps_m (8 pi m - 2 pi) -> 1") {
    for (std::size_t m = 100; m <= 1000; ++m) {
      const double scaled = table.mcmahon_eps(m) * (8.0 * kPi * m - 2.0 * kPi);
      CHECK(std::abs(scaled - 1.0) <= 0.01);
    }
  }
  SUBCASE("tabulated zeros agree with oracle zeros for small m") {
    for (std::size_t m = 1; m <= 15; ++m) {
      const double seed = mcmahon_seed(static_cast<long>(m));
      const double z = oracle::bisect([](double x) { return oracle::j0(x); }, seed - 0.5, seed + 0.5);
      CHECK(std::abs(table.zero(m) - z) <= 1e-12);
    }
  }
}

TEST_CASE("zero table properties") {
  const auto table = compute_zero_table(400);
  SUBCASE("J0 alternates sign on midpoints between consecutive zeros") {
    for (std::size_t m = 1; m < table.count(); ++m) {
      const double mid = 0.5 * (table.zero(m) + table.zero(m + 1));
      const double expected_sign = (m % 2 == 1) ? -1.0 : 1.0;
      CHECK(bessel_j0(mid) * expected_sign > 0.0);
    }
  }
  SUBCASE("sqrt(j_m) |J1(j_m)| bounded and bounded away from zero") {
    for (std::size_t m = 1; m <= table.count(); ++m) {
      const double s = std::sqrt(table.zero(m)) * std::abs(table.j1_at_zero(m));
      CHECK(s > 0.7);
      CHECK(s < 0.85);
    }
  }
  SUBCASE("|J1(j_m)| strictly decreasing on the table (empirical)") {
    for (std::size_t m = 1; m < table.count(); ++m)
      CHECK(std::abs(table.j1_at_zero(m + 1)) < std::abs(table.j1_at_zero(m)));
  }
}

TEST_CASE("mcmahon_zero tracks refined zeros") {
  const auto table = compute_zero_table(200);
  for (std::size_t m = 50; m <= 200; m += 9)
    CHECK(std::abs(mcmahon_zero(static_cast<long>(m)) - table.zero(m)) <= 1e-15 * table.zero(m));
}

TEST_CASE("ZeroTable rejects out-of-range access and bad construction") {
  const auto table = compute_zero_table(3);
  CHECK_THROWS_AS(table.zero(0), RangeError);
  CHECK_THROWS_AS(table.zero(4), RangeError);
  CHECK_THROWS_AS(compute_zero_table(0), DomainError);
  CHECK_THROWS_AS(ZeroTable({1.0}, {}, {}), DomainError);
  CHECK_THROWS_AS(refine_zero(0), ComputationError);
}

TEST_CASE("ZeroTable::check reports violations") {
  ZeroTable bad({2.0, 1.5}, {0.5, 0.3}, {0.0, 1.0});
  const auto v = bad.check();
  CHECK(v.size() >= 3);
}
