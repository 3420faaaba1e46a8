#include "bfk/acceptance.hpp"

#include "bfk/conjecture_lab.hpp"
#include "bfk/construction.hpp"
#include "bfk/errors.hpp"
#include "bfk/kernels.hpp"
#include "bfk/oracles.hpp"
#include "bfk/quadrature.hpp"
#include "bfk/sequences.hpp"
#include "bfk/special_functions.hpp"
#include "bfk/summation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace bfk {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const ZeroTable& zeros() {
  static const ZeroTable t = compute_zero_table(20001);
  return t;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  CompensatedSum<double> sx, sy, sxx, sxy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  return (n * sxy.value() - sx.value() * sy.value()) / (n * sxx.value() - sx.value() * sx.value());
}

Outcome c1_special_functions() {
  double e0 = 0.0, e1 = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = 50.0 * i / 9999.0;
    e0 = std::max(e0, std::abs(bessel_j0(x) - oracle::j0(x)));
    e1 = std::max(e1, std::abs(bessel_j1(x) - oracle::j1(x)));
  }
  return {e0 <= 1e-12 && e1 <= 1e-12, "max|J0 err|=" + sci(e0) + ", max|J1 err|=" + sci(e1) + " (tol 1e-12)"};
}

Outcome c2_zero_table() {
  const auto& t = zeros();
  double worst_res = 0.0, lo = 1e300, hi = -1e300;
  bool bounds = true;
  for (std::size_t m = 1; m <= 1000; ++m) {
    const double j = t.zero(m), dm = static_cast<double>(m);
    worst_res = std::max(worst_res, std::abs(bessel_j0(j)));
    bounds = bounds && j > dm && j >= kPi * dm - kPi / 4;
    if (m >= 100) {
      const double s = t.mcmahon_eps(m) * (8.0 * kPi * dm - 2.0 * kPi);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  const bool ok = worst_res <= 1e-12 && bounds && lo >= 0.99 && hi <= 1.01;
  return {ok, "max|J0(j_m)|=" + sci(worst_res) + ", lower bounds " + (bounds ? "hold" : "FAIL") +
                  ", eps*(8 pi m - 2 pi) in [" + sci(lo) + ", " + sci(hi) + "] (need [0.99, 1.01])"};
}

Outcome c3_fejer() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> nd(0, 200);
  std::uniform_real_distribution<double> xd(-1.0, 2.0);
  double diff = 0.0, min_val = 1e300;
  for (int i = 0; i < 1000; ++i) {
    const long N = nd(rng);
    const double x = xd(rng), c = fejer_closed_form(N, x);
    diff = std::max(diff, std::abs(fejer_sum(N, x) - c));
    min_val = std::min(min_val, c);
  }
  // Periodic trapezoid with more nodes than the degree integrates F_N exactly.
  double mass_err = 0.0;
  for (long N : {0L, 1L, 7L, 50L, 123L, 200L}) {
    const int nodes = 1024;
    CompensatedSum<double> s;
    for (int k = 0; k < nodes; ++k) {
      const double v = fejer_closed_form(N, static_cast<double>(k) / nodes);
      s += v;
      min_val = std::min(min_val, v);
    }
    mass_err = std::max(mass_err, std::abs(s.value() / nodes - 1.0));
  }
  return {diff <= 1e-10 && min_val >= 0.0 && mass_err <= 1e-10,
          "max|sum - closed|=" + sci(diff) + " (tol 1e-10), min F_N=" + sci(min_val) + ", max|mass - 1|=" +
              sci(mass_err) + " (tol 1e-10)"};
}

Outcome c4_positivity() {
  const std::size_t Ms[] = {10, 100, 1000};
  const auto a = scan_positivity(0.5, Ms, 10000, zeros());
  const auto b = scan_positivity(0.5, Ms, 20000, zeros());
  bool nonneg = true, stable = true;
  std::ostringstream d;
  for (std::size_t k = 0; k < std::size(Ms); ++k) {
    const auto& pa = a.records[k].params;
    const double gmin = pa.at("grid_min"), change = std::abs(gmin - b.records[k].params.at("grid_min"));
    nonneg = nonneg && gmin >= 0.0;
    stable = stable && change < pa.at("slack");
    d << "M=" << Ms[k] << ": min=" << sci(gmin) << " at x=" << sci(pa.at("grid_arg")) << ", doubling change "
      << sci(change) << " vs slack " << sci(pa.at("slack")) << "; ";
  }
  d << "minima >= 0: " << (nonneg ? "yes" : "NO") << ", doubling within slack: " << (stable ? "yes" : "NO");
  return {nonneg && stable, d.str()};
}

Outcome c5_lower_bound() {
  std::vector<std::size_t> Ms;
  for (std::size_t M = 1; M <= 50; ++M) Ms.push_back(M);
  for (std::size_t M : {100, 200, 500, 1000}) Ms.push_back(M);
  bool ok = true;
  std::ostringstream d;
  for (auto v : {KernelVariant::standard, KernelVariant::even}) {
    for (double a : {0.0, 0.25, 0.4}) {
      const auto r = scan_lower_bound(a, Ms, 10000, zeros(), v);
      const bool held = r.verdict == Verdict::holds_on_grid;
      ok = ok && held;
      d << to_string(v) << " a=" << a << ": C=" << sci(r.summary.at("C")) << ", last-doubling change "
        << sci(r.summary.at("relative_change")) << (held ? " ok" : " NOT STABLE") << "; ";
    }
  }
  return {ok, d.str()};
}

Outcome c6_construction() {
  const auto& t = zeros();
  std::vector<double> c(64);
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = std::ldexp(1.0, -static_cast<int>(m));
  const auto seq = ConvexSeq::from_values(c);
  // Closed form of T(m, 40) for c = 2^{-m}: sum_{l=m}^{40} (l+1-m) 2^{-l}/4.
  auto closed = [](std::size_t m) {
    long double s = 0.0L;
    for (std::size_t l = m; l <= 40; ++l) s += (l + 1.0L - m) * std::ldexp(1.0L, -static_cast<int>(l)) / 4.0L;
    return static_cast<double>(s);
  };
  const auto f = build_f({0.4, seq, 40, ConstructionVariant::standard}, t);
  double err = 0.0;
  for (const auto& e : coefficients_of_f(f, 1, 40, t).entries)
    err = std::max(err, std::abs(e.f_m - std::pow(e.j_m, 0.4) * closed(e.m)));
  const auto fe = build_f({0.4, seq, 40, ConstructionVariant::even_only}, t);
  double odd = 0.0;
  for (const auto& e : coefficients_of_f(fe, 1, 81, t).entries)
    if (e.m % 2 == 1) odd = std::max(odd, std::abs(e.f_m));
  return {err <= 1e-8 && odd <= 1e-8,
          "max|f_m - j_m^a T(m,L)|=" + sci(err) + ", even_only max|f_odd|=" + sci(odd) + " (tol 1e-8)"};
}

Outcome c7_example_exponent() {
  const auto r = decay_experiment(0.0, Integrand::power(-1.5), 20, 200, zeros());
  const double s = slope(r.j, r.coeff);
  return {std::abs(s - 0.5) <= 0.1, "slope=" + sci(s) + " (need 0.5 +- 0.1)"};
}

Outcome c8_telescope() {
  std::vector<double> c(80);
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = std::ldexp(1.0, -static_cast<int>(m));
  const auto seq = ConvexSeq::from_values(c);
  double err = 0.0;
  for (std::size_t k = 0; k <= 5; ++k) err = std::max(err, std::abs(telescope_sum(seq, k, 60) - c[k]));
  return {err <= 1e-12, "max|telescope - 2^-k|=" + sci(err) + " (tol 1e-12)"};
}

Outcome c9_j1() {
  const auto r = scan_j1_behavior(1000, zeros());
  return {r.verdict == Verdict::holds_on_grid,
          "violations=" + std::to_string(r.violations.size()) + ", |sqrt(j)|J1| - sqrt(2/pi)| at m=1000: " +
              sci(r.summary.at("gap")) + " (tol 1e-3)"};
}

Outcome c10_alpha_half() {
  const auto& t = zeros();
  const std::size_t M50[] = {50};
  const KernelSpec spec{KernelVariant::standard, 0.5, 50};
  const double breaks[] = {0.0, 1.0};
  const auto q = integrate_panels([&](double x) { return kernel_value(spec, x, t) * x; }, breaks, 0.0, t.zero(50), {});
  const double diff = std::abs(alpha_half_norm_sum(M50, t).records[0].value - q.value);
  std::vector<std::size_t> Ms;
  for (std::size_t M = 1; M <= 2000; ++M) Ms.push_back(M);
  const auto r = alpha_half_norm_sum(Ms, t);
  return {diff <= 1e-8 && r.verdict == Verdict::holds_on_grid,
          "|sum - quadrature| at M=50: " + sci(diff) + " (tol 1e-8); range over M<=2000 [" + sci(r.summary.at("min")) +
              ", " + sci(r.summary.at("max")) + "] within [0, " + sci(r.summary.at("envelope")) + "]"};
}

Outcome c11_g_minima() {
  bool ok = true;
  std::ostringstream d;
  for (double a : {0.0, 0.25, 0.4}) {
    const auto r = scan_g_minima(a, 51);
    ok = ok && r.verdict == Verdict::holds_on_grid;
    d << "a=" << a << ": smallest step " << sci(r.summary.at("smallest_step")) << "; ";
  }
  return {ok, d.str()};
}

Outcome c12_exp_max() {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> ad(0.01, 2.0), ud(1e-3, 2.0);
  double worst_excess = -1e300, worst_match = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a = ad(rng), u = ud(rng), bound = malpha_exp_max(a, u);
    for (int m = 1; m <= 10000; ++m)
      worst_excess = std::max(worst_excess, std::pow(m, a) * std::exp(-m * u) / bound - 1.0);
    const double peak = a / u;
    const double g = oracle::golden_max([&](double y) { return std::pow(y, a) * std::exp(-y * u); }, 0.0, 4.0 * peak + 1.0);
    worst_match = std::max(worst_match, std::abs(g - bound));
  }
  return {worst_excess <= 1e-12 && worst_match <= 1e-9,
          "max relative excess of m^a e^{-mu}=" + sci(worst_excess) + ", max|golden - closed|=" + sci(worst_match) +
              " (tol 1e-9)"};
}

Outcome c13_divergence() {
  const auto r = divergence_sum(10000, zeros());
  double s100 = 0.0, c100 = 0.0, s_end = 0.0, c_end = 0.0;
  for (const auto& rec : r.records) {
    if (rec.params.at("M") == 100.0) s100 = rec.value, c100 = rec.params.at("comparator");
    if (rec.params.at("M") == 10000.0) s_end = rec.value, c_end = rec.params.at("comparator");
  }
  const double kappa = r.summary.at("kappa");
  const double margin = s_end - s100, gap = c_end - c100;
  const bool ok = r.verdict == Verdict::holds_on_grid && margin >= 0.5 * kappa * gap;
  return {ok, "strictly increasing, ratio in [" + sci(r.summary.at("ratio_min")) + ", " + sci(r.summary.at("ratio_max")) +
                  "] (band [" + sci(kappa / 2) + ", " + sci(2 * kappa) + "]); margin " + sci(margin) +
                  " vs kappa/2 * comparator gap " + sci(0.5 * kappa * gap) +
                  "; violations=" + std::to_string(r.violations.size())};
}

Outcome c14_decomposition() {
  const auto& t = zeros();
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> ad(0.0, 0.5), xd(1e-3, 1.0);
  std::uniform_int_distribution<std::size_t> md(1, 200);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double a = ad(rng), x = xd(rng);
    const std::size_t M = md(rng);
    const auto d = eval_decomposition(a, M, x, t);
    const double lhs = std::pow(x, a + 1.0) * partial_sum(a, M, x, t);
    worst = std::max(worst, std::abs(d.leading_combined + d.remainder_sum - lhs) / (static_cast<double>(M) * 1e-11));
  }
  double first = 0.0, second = 0.0;
  for (std::size_t M : {20u, 60u, 120u, 250u, 380u, 500u}) {
    double sup = std::abs(sum_integral_gap(0.25, M, 1e-3, t));
    for (int i = 1; i <= 40; ++i) sup = std::max(sup, std::abs(sum_integral_gap(0.25, M, i / 40.0, t)));
    (M <= 250 ? first : second) = std::max(M <= 250 ? first : second, sup);
  }
  const bool ok = worst <= 1.0 && std::isfinite(first) && second <= 1.05 * first;
  return {ok, "max identity error / (M 1e-11)=" + sci(worst) + "; sup|gap| M<=250: " + sci(first) +
                  ", 250<M<=500: " + sci(second) + " (need <= 1.05x)"};
}

struct Entry {
  int id;
  const char* name;
  Outcome (*run)();
};

const Entry kCriteria[] = {
    {1, "special-function accuracy", c1_special_functions},
    {2, "zero-table certification", c2_zero_table},
    {3, "Fejer sanity", c3_fejer},
    {4, "positivity of K^{1/2}_M on the grid", c4_positivity},
    {5, "uniform lower bound constant", c5_lower_bound},
    {6, "construction coefficient identity", c6_construction},
    {7, "x^{-3/2} coefficient exponent", c7_example_exponent},
    {8, "telescope identity", c8_telescope},
    {9, "J1 at zeros", c9_j1},
    {10, "alpha = 1/2 norm sum", c10_alpha_half},
    {11, "G minima increase", c11_g_minima},
    {12, "m^a e^{-mu} maximum", c12_exp_max},
    {13, "divergence harness", c13_divergence},
    {14, "decomposition identity and gap", c14_decomposition},
};

}  // namespace

std::vector<int> acceptance_ids() {
  std::vector<int> ids;
  for (const auto& e : kCriteria) ids.push_back(e.id);
  return ids;
}

std::vector<CriterionResult> run_acceptance(std::span<const int> ids) {
  std::vector<CriterionResult> out;
  for (const auto& e : kCriteria) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
    CriterionResult r{e.id, e.name, false, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = e.run();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  }
  for (int id : ids)
    if (id < 1 || id > static_cast<int>(std::size(kCriteria))) throw DomainError("unknown criterion " + std::to_string(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s [%2d] ", r.passed ? "PASS" : "FAIL", r.id);
  char tail[32];
  std::snprintf(tail, sizeof tail, " (%.1f s)", r.seconds);
  return head + r.name + ": " + r.detail + tail;
}

}  // namespace bfk
