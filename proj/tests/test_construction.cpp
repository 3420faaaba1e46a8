#include "doctest.h"

#include "bfk/construction.hpp"
#include "bfk/errors.hpp"

#include <cmath>

using namespace bfk;

namespace {

const ZeroTable& table() {
  static const ZeroTable t = compute_zero_table(400);
  return t;
}

// sum_{l=m}^{L} (l+1-m) 2^{-l}/4, the second differences of 2^{-l} being 2^{-l}/4.
double geometric_truncated_telescope(std::size_t m, std::size_t L) {
  long double s = 0.0L;
  for (std::size_t l = m; l <= L; ++l) s += (l + 1.0L - m) * std::ldexp(1.0L, -static_cast<int>(l)) / 4.0L;
  return static_cast<double>(s);
}

}  // namespace

TEST_CASE("build_f examples") {
  SUBCASE("zero sequence gives f = 0") {
    const ConstructionSpec spec{0.2, ConvexSeq::from_values(std::vector<double>(20, 0.0)), 15,
                                ConstructionVariant::standard};
    const auto f = build_f(spec, table());
    CHECK(f.evaluate(0.0) == 0.0);
    CHECK(f.evaluate(0.37) == 0.0);
    CHECK(f.weighted_l1 == 0.0);
  }
  SUBCASE("weighted norm is at most sup_l ||x K_l||_1 times c_0") {
    const ConstructionSpec spec{0.0, geometric_seq(0.5, 40), 30, ConstructionVariant::standard};
    const auto f = build_f(spec, table());
    double sup = 0.0;
    for (std::size_t l = 1; l <= 30; ++l)
      sup = std::max(sup, kernel_weighted_l1({KernelVariant::standard, 0.0, l}, 1.0, table()).value);
    CHECK(f.weighted_l1 > 0.0);
    CHECK(f.weighted_l1 <= sup * spec.seq[0] * (1 + 1e-6));
  }
  SUBCASE("reordered sum equals the double sum") {
    for (auto v : {ConstructionVariant::standard, ConstructionVariant::even_only, ConstructionVariant::odd_only}) {
      const ConstructionSpec spec{0.3, geometric_seq(0.7, 60), 25, v};
      const auto f = build_f(spec, table());
      for (double x : {0.0, 0.013, 0.4, 0.81, 1.0}) {
        const double direct = evaluate_direct(spec, x, table());
        CHECK(std::abs(f.evaluate(x) - direct) <= 1e-13 * (1.0 + std::abs(f.evaluate(0.0))));
      }
    }
  }
}

TEST_CASE("build_f error paths") {
  const auto seq = geometric_seq(0.5, 40);
  CHECK_THROWS_AS(build_f({0.5, seq, 10, ConstructionVariant::standard}, table()), DomainError);
  CHECK_THROWS_AS(build_f({0.1, seq, 39, ConstructionVariant::standard}, table()), DomainError);
  CHECK_NOTHROW(build_f({0.1, seq, 38, ConstructionVariant::standard}, table()));
  const auto small = compute_zero_table(20);
  CHECK_NOTHROW(build_f({0.1, seq, 10, ConstructionVariant::even_only}, small));
  CHECK_THROWS_AS(build_f({0.1, seq, 10, ConstructionVariant::odd_only}, small), RangeError);
  CHECK_THROWS_AS(build_f({0.1, seq, 21, ConstructionVariant::standard}, small), RangeError);
}

TEST_CASE("coefficient identity of the construction") {
  const ConstructionSpec spec{0.4, geometric_seq(0.5, 60), 40, ConstructionVariant::standard};
  const auto f = build_f(spec, table());
  const auto rep = coefficients_of_f(f, 1, 45, table());
  for (const auto& e : rep.entries) {
    const double target = e.m <= 40 ? std::pow(e.j_m, 0.4) * geometric_truncated_telescope(e.m, 40) : 0.0;
    CHECK(std::abs(e.f_m - target) <= 1e-8);
    CHECK(std::abs(e.f_m - expected_coefficient(spec, e.m, table())) <= 1e-8);
  }
  // f_5 / j_5^alpha against the closed-form telescope.
  CHECK(std::abs(rep.entries[4].normalized - geometric_truncated_telescope(5, 40)) <= 1e-8);
}

TEST_CASE("even_only and odd_only kill the other parity") {
  const auto seq = geometric_seq(0.5, 60);
  SUBCASE("even_only") {
    const ConstructionSpec spec{0.4, seq, 40, ConstructionVariant::even_only};
    const auto f = build_f(spec, table());
    for (const auto& e : coefficients_of_f(f, 1, 84, table()).entries) {
      if (e.m % 2 == 1) CHECK(std::abs(e.f_m) <= 1e-8);
      CHECK(std::abs(e.f_m - expected_coefficient(spec, e.m, table())) <= 1e-8);
    }
    CHECK(expected_coefficient(spec, 10, table()) ==
          doctest::Approx(std::pow(table().zero(5), 0.4) * geometric_truncated_telescope(5, 40)).epsilon(1e-14));
  }
  SUBCASE("odd_only") {
    const ConstructionSpec spec{0.25, seq, 20, ConstructionVariant::odd_only};
    const auto f = build_f(spec, table());
    for (const auto& e : coefficients_of_f(f, 1, 44, table()).entries) {
      if (e.m % 2 == 0 || e.m == 1) CHECK(std::abs(e.f_m) <= 1e-8);
      CHECK(std::abs(e.f_m - expected_coefficient(spec, e.m, table())) <= 1e-8);
    }
  }
}

TEST_CASE("weighted norms of x^{alpha+1} K_L stay bounded in L") {
  for (double a : {0.0, 0.25, 0.4}) {
    double early = 0.0, late = 0.0;
    for (std::size_t L = 1; L <= 30; ++L) {
      const double n = kernel_weighted_l1({KernelVariant::standard, a, L}, a + 1.0, table()).value;
      (L <= 15 ? early : late) = std::max(L <= 15 ? early : late, n);
    }
    CHECK(late <= 1.1 * early);
  }
}

TEST_CASE("decay_experiment") {
  SUBCASE("f = 1, s = 1/2: f_m / j_m = 2 / (j_m^2 J1(j_m)) decays like j^{-3/2}") {
    const auto r = decay_experiment(0.5, Integrand::constant(1.0), 10, 120, table());
    for (std::size_t i = 0; i < r.m.size(); ++i) {
      const double exact = 2.0 / (r.j[i] * r.j[i] * table().j1_at_zero(r.m[i]));
      CHECK(std::abs(r.ratio[i] - exact) <= 1e-10 * std::abs(exact) + 1e-14);
    }
    CHECK(std::abs(r.loglog_slope + 1.5) <= 0.05);
    CHECK(r.decaying);
  }
  SUBCASE("f = x^{-3/2}, s = 1/2: exponent near -1/2") {
    const auto r = decay_experiment(0.5, Integrand::power(-1.5), 20, 200, table());
    CHECK(std::abs(r.loglog_slope + 0.5) <= 0.1);
    CHECK(r.decaying);
  }
  SUBCASE("constructed f recovers c_m after normalization") {
    const ConstructionSpec spec{0.4, geometric_seq(0.5, 60), 40, ConstructionVariant::standard};
    const auto f = build_f(spec, table());
    const auto rep = coefficients_of_f(f, 1, 12, table());
    for (const auto& e : rep.entries)
      CHECK(std::abs(e.normalized - std::ldexp(1.0, -static_cast<int>(e.m))) <= 1e-8 + 42.0 * std::ldexp(1.0, -41));
  }
  CHECK_THROWS_AS(decay_experiment(0.7, Integrand::constant(1.0), 1, 5, table()), DomainError);
}
