#include "bfk/conjecture_lab.hpp"

#include "bfk/errors.hpp"
#include "bfk/parallel.hpp"
#include "bfk/summation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace bfk {

namespace {

constexpr double kPi = std::numbers::pi;

void finish(ScanReport& r, bool conclusive) {
  if (!r.violations.empty())
    r.verdict = Verdict::violated;
  else
    r.verdict = conclusive ? Verdict::holds_on_grid : Verdict::inconclusive;
}

double max_spacing(const std::vector<double>& g) {
  double h = 0.0;
  for (std::size_t i = 1; i < g.size(); ++i) h = std::max(h, g[i] - g[i - 1]);
  return h;
}

// Golden-section refinement of a grid minimum between its neighbours.
Minimum refine(const std::function<double(double)>& f, const std::vector<double>& grid, std::size_t i,
               double grid_value) {
  const double a = grid[i == 0 ? 0 : i - 1];
  const double b = grid[std::min(i + 1, grid.size() - 1)];
  Minimum best = golden_min(f, a, b);
  if (!(best.value < grid_value)) best = {grid[i], grid_value};
  return best;
}

std::size_t argmin(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

void check_bessel_variant(KernelVariant v, const char* who) {
  if (v == KernelVariant::fejer) throw DomainError(std::string(who) + ": Bessel kernel variants only");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string to_string(ScanTarget t) {
  switch (t) {
    case ScanTarget::kernel_positivity: return "kernel_positivity";
    case ScanTarget::lower_bound_constant: return "lower_bound_constant";
    case ScanTarget::j1_monotone: return "j1_monotone";
    case ScanTarget::g_minima: return "g_minima";
    case ScanTarget::divergence_sum: return "divergence_sum";
    case ScanTarget::sqrtx_norms: return "sqrtx_norms";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds_on_grid: return "holds_on_grid";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

ScanTarget scan_target_from_string(const std::string& s) {
  for (auto t : {ScanTarget::kernel_positivity, ScanTarget::lower_bound_constant, ScanTarget::j1_monotone,
                 ScanTarget::g_minima, ScanTarget::divergence_sum, ScanTarget::sqrtx_norms})
    if (to_string(t) == s) return t;
  throw DomainError("unknown scan target '" + s + "'");
}

Minimum golden_min(const std::function<double(double)>& f, double a, double b, int iters) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && d - c > 0.0; ++i) {
    if (fc < fd) {
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
  return fc < fd ? Minimum{c, fc} : Minimum{d, fd};
}

ScanReport scan_positivity(double alpha, std::span<const std::size_t> Ms, std::size_t grid_density,
                           const ZeroTable& table, KernelVariant variant) {
  check_bessel_variant(variant, "scan_positivity");
  ScanReport r;
  r.target = ScanTarget::kernel_positivity;
  r.parameters = {{"alpha", alpha}, {"grid_density", static_cast<double>(grid_density)},
                  {"variant", static_cast<double>(variant)}};
  const auto grid = mixed_grid(grid_density);
  const double h = max_spacing(grid);
  const auto fam = eval_kernel_family(variant, alpha, Ms, grid, table);
  r.records.resize(Ms.size());
  parallel_for(Ms.size(), [&](std::size_t k) {
    const KernelSpec spec{variant, alpha, Ms[k]};
    const auto& v = fam[k];
    const std::size_t i = argmin(v);
    const Minimum best = refine([&](double x) { return kernel_value(spec, x, table); }, grid, i, v[i]);
    // Weights are positive, so their sum is K(0).
    const double eval_tol = Ms[k] == 0 ? 0.0 : 1e-12 * kernel_value(spec, 0.0, table);
    r.records[k] = {{{"M", static_cast<double>(Ms[k])},
                     {"grid_min", v[i]},
                     {"grid_arg", grid[i]},
                     {"slack", kernel_lipschitz(spec, table) * h / 2.0},
                     {"eval_tol", eval_tol}},
                    best.value,
                    best.x};
  });
  bool grid_ok = true;
  double overall = std::numeric_limits<double>::infinity();
  for (const auto& rec : r.records) {
    const double tol = rec.params.at("eval_tol");
    overall = std::min(overall, rec.value);
    if (rec.params.at("grid_min") < -tol) grid_ok = false;
    if (rec.value < -tol)
      r.violations.push_back("M=" + fmt(rec.params.at("M")) + ": K=" + fmt(rec.value) + " at x=" + fmt(rec.arg));
  }
  r.summary = {{"min", overall}, {"grid_points", static_cast<double>(grid.size())}, {"max_spacing", h}};
  finish(r, grid_ok);
  return r;
}

ScanReport scan_lower_bound(double alpha, std::span<const std::size_t> Ms, std::size_t grid_density,
                            const ZeroTable& table, KernelVariant variant) {
  check_bessel_variant(variant, "scan_lower_bound");
  if (!(alpha < 0.5)) throw DomainError("scan_lower_bound: alpha must be < 1/2");
  ScanReport r;
  r.target = ScanTarget::lower_bound_constant;
  r.parameters = {{"alpha", alpha}, {"grid_density", static_cast<double>(grid_density)},
                  {"variant", static_cast<double>(variant)}};
  const auto grid = mixed_grid(grid_density);
  const auto fam = eval_kernel_family(variant, alpha, Ms, grid, table);
  std::vector<ScanRecord> recs(Ms.size());
  parallel_for(Ms.size(), [&](std::size_t k) {
    const KernelSpec spec{variant, alpha, Ms[k]};
    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) w[i] = std::pow(grid[i], alpha + 1.0) * fam[k][i];
    const std::size_t i = argmin(w);
    const Minimum best = refine(
        [&](double x) { return std::pow(x, alpha + 1.0) * kernel_value(spec, x, table); }, grid, i, w[i]);
    const double eval_tol = Ms[k] == 0 ? 0.0 : 1e-12 * kernel_value(spec, 0.0, table);
    recs[k] = {{{"M", static_cast<double>(Ms[k])},
                {"grid_min", w[i]},
                {"min_K", *std::min_element(fam[k].begin(), fam[k].end())},
                {"eval_tol", eval_tol}},
               best.value,
               best.x};
  });
  std::sort(recs.begin(), recs.end(),
            [](const ScanRecord& a, const ScanRecord& b) { return a.params.at("M") < b.params.at("M"); });
  double run = std::numeric_limits<double>::infinity();
  for (auto& rec : recs) {
    run = std::min(run, rec.value);
    rec.params["running_inf"] = run;
    const double floor = std::min(rec.params.at("min_K"), 0.0) - rec.params.at("eval_tol");
    if (rec.params.at("grid_min") < floor)
      r.violations.push_back("M=" + fmt(rec.params.at("M")) + ": min x^{a+1}K below min(min K, 0)");
  }
  r.records = std::move(recs);
  bool stable = false;
  if (!r.records.empty()) {
    const double m_last = r.records.back().params.at("M");
    const ScanRecord* prev = nullptr;
    for (const auto& rec : r.records)
      if (rec.params.at("M") <= m_last / 2.0) prev = &rec;
    const double c_last = r.records.back().params.at("running_inf");
    r.summary["C"] = -c_last;
    if (prev) {
      const double c_prev = prev->params.at("running_inf");
      const double change = std::abs(c_last - c_prev);
      r.summary["M_prev"] = prev->params.at("M");
      r.summary["change"] = change;
      r.summary["relative_change"] = change / std::max(std::abs(c_prev), 1e-300);
      stable = change <= 0.01 * std::abs(c_prev) + 1e-12;
    }
  }
  finish(r, stable);
  return r;
}

ScanReport scan_j1_behavior(std::size_t M_max, const ZeroTable& table) {
  table.require(std::max<std::size_t>(M_max, 1), "scan_j1_behavior");
  ScanReport r;
  r.target = ScanTarget::j1_monotone;
  r.parameters = {{"M_max", static_cast<double>(M_max)}};
  for (std::size_t m = 1; m <= M_max; ++m) {
    const double j = table.zero(m), J = table.j1_at_zero(m);
    r.records.push_back({{{"m", static_cast<double>(m)}, {"j_m", j}, {"J1", J}}, std::sqrt(j) * std::abs(J), j});
    if ((J > 0.0) != (m % 2 == 1)) r.violations.push_back("sign of J1(j_" + std::to_string(m) + ")");
    if (m > 1 && !(std::abs(J) < std::abs(table.j1_at_zero(m - 1))))
      r.violations.push_back("|J1| not decreasing at m=" + std::to_string(m));
  }
  const double limit = std::sqrt(2.0 / kPi);
  const double last = M_max ? r.records.back().value : 0.0;
  r.summary = {{"limit", limit}, {"last", last}, {"gap", std::abs(last - limit)}};
  if (M_max && std::abs(last - limit) > 1e-3) r.violations.push_back("sqrt(j)|J1| not within 1e-3 of sqrt(2/pi)");
  finish(r, true);
  return r;
}

ScanReport alpha_half_norm_sum(std::span<const std::size_t> Ms, const ZeroTable& table) {
  ScanReport r;
  r.target = ScanTarget::j1_monotone;
  std::size_t m_max = 0;
  for (std::size_t M : Ms) m_max = std::max(m_max, M);
  table.require(std::max<std::size_t>(m_max, 1), "alpha_half_norm_sum");
  r.parameters = {{"M_max", static_cast<double>(m_max)}};
  const double envelope = table.j1_at_zero(1) / std::sqrt(table.zero(1));
  // Prefix sums A = sum t_m, B = sum m t_m give every M in one pass.
  std::vector<double> A(m_max + 1, 0.0), B(m_max + 1, 0.0);
  CompensatedSum<double> a, b;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const double t = table.j1_at_zero(m) / std::sqrt(table.zero(m));
    a += t;
    b += static_cast<double>(m) * t;
    A[m] = a.value();
    B[m] = b.value();
  }
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t M : Ms) {
    const double s = A[M] - B[M] / static_cast<double>(M + 1);
    r.records.push_back({{{"M", static_cast<double>(M)}}, s, 0.0});
    lo = std::min(lo, s);
    hi = std::max(hi, s);
    if (s < -1e-14 || s > envelope + 1e-14)
      r.violations.push_back("M=" + std::to_string(M) + " outside [0, J1(j_1)/sqrt(j_1)]");
  }
  r.summary = {{"envelope", envelope}, {"min", lo}, {"max", hi}};
  finish(r, true);
  return r;
}

ScanReport scan_g_minima(double alpha, std::size_t k_max, const QuadratureConfig& cfg) {
  ScanReport r;
  r.target = ScanTarget::g_minima;
  r.parameters = {{"alpha", alpha}, {"k_max", static_cast<double>(k_max)}};
  r.records.resize(k_max + 1);
  parallel_for(k_max + 1, [&](std::size_t k) {
    const double y = 1.5 * kPi + 2.0 * kPi * static_cast<double>(k);
    r.records[k] = {{{"k", static_cast<double>(k)}}, oscillatory_gh(y, alpha, cfg).first, y};
  });
  double smallest_step = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double step = r.records[k].value - r.records[k - 1].value;
    smallest_step = std::min(smallest_step, step);
    if (step < 0.0) r.violations.push_back("G decreases between minima " + std::to_string(k - 1) + " and " + std::to_string(k));
  }
  r.summary = {{"smallest_step", smallest_step}, {"G_first", r.records.front().value}};
  finish(r, true);
  return r;
}

double divergence_ratio_limit() { return std::sqrt(2.0 / kPi) / (2.0 * kPi); }

ScanReport divergence_sum(std::size_t M_max, const ZeroTable& table, std::size_t stride) {
  if (stride == 0) throw DomainError("divergence_sum: stride must be >= 1");
  ScanReport r;
  r.target = ScanTarget::divergence_sum;
  const std::size_t from = table.count() + 1;
  r.parameters = {{"M_max", static_cast<double>(M_max)}, {"mcmahon_from", static_cast<double>(from)}};
  const double kappa = divergence_ratio_limit();
  CompensatedSum<double> sum, comp;
  double prev = 0.0, rmin = std::numeric_limits<double>::infinity(), rmax = -rmin;
  for (std::size_t m = 1; m <= M_max; ++m) {
    const std::size_t n = 2 * m + 1;
    double j, J1;
    if (n < from) {
      j = table.zero(n);
      J1 = table.j1_at_zero(n);
    } else {
      j = mcmahon_zero(static_cast<long>(n));
      J1 = bessel_j1(j);
    }
    const double g = std::sqrt(j) / std::log(m + 2.0);
    sum += g * std::abs(J1) / j;
    comp += 1.0 / (static_cast<double>(m) * std::log(2.0 * m + 1.0));
    const double s = sum.value();
    if (!(s > prev)) r.violations.push_back("partial sum not increasing at M=" + std::to_string(m));
    prev = s;
    const double ratio = s / comp.value();
    if (m >= 100) {
      rmin = std::min(rmin, ratio);
      rmax = std::max(rmax, ratio);
      if (ratio < kappa / 2.0 || ratio > 2.0 * kappa)
        r.violations.push_back("ratio out of band at M=" + std::to_string(m));
    }
    if (m % stride == 0 || m == M_max || m == 100)
      r.records.push_back({{{"M", static_cast<double>(m)}, {"comparator", comp.value()}, {"ratio", ratio}}, s, 0.0});
  }
  r.summary = {{"kappa", kappa}, {"ratio_min", rmin}, {"ratio_max", rmax}, {"sum", prev}, {"comparator", comp.value()}};
  finish(r, true);
  return r;
}

std::vector<SqrtxPieces> sqrtx_pieces(double alpha, std::size_t m_max, const ZeroTable& table,
                                      const QuadratureConfig& cfg) {
  if (!(alpha >= 0.0 && alpha < 0.5)) throw DomainError("sqrtx_pieces: alpha must lie in [0, 1/2)");
  table.require(std::max<std::size_t>(m_max, 1), "sqrtx_pieces");
  auto j0_root = [](double y) { return bessel_j0(y) * std::sqrt(y); };
  auto root_rem = [](double y) { return std::sqrt(y) * j0_remainder(y); };
  const double unit[] = {0.0, 1.0};
  const double i01 = integrate_panels(j0_root, unit, 0.5, 1.0, cfg).value;
  // Running integrals over [0, j_m] of J0 sqrt(y) and over [1, j_m] of sqrt(y) R(y).
  CompensatedSum<double> full, rem;
  full += i01;
  double y0 = 1.0;
  std::vector<SqrtxPieces> out;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const double j = table.zero(m);
    const double seg[] = {y0, j};
    full += integrate_panels(j0_root, seg, 0.0, 1.0, cfg).value;
    rem += integrate_panels(root_rem, seg, 0.0, 1.0, cfg).value;
    y0 = j;
    const double sc = std::pow(j, alpha - 1.5);
    SqrtxPieces p;
    p.m = m;
    p.p1 = sc * i01;
    p.p2 = sc * std::sqrt(2.0 / kPi) * (std::sin(j - kPi / 4) - std::sin(1.0 - kPi / 4));
    p.p3 = sc * rem.value();
    p.total = sc * full.value();
    out.push_back(p);
  }
  return out;
}

ScanReport scan_sqrtx_norms(double alpha, std::span<const std::size_t> Ms, const ZeroTable& table,
                            const QuadratureConfig& cfg) {
  ScanReport r;
  r.target = ScanTarget::sqrtx_norms;
  std::size_t m_max = 0;
  for (std::size_t M : Ms) m_max = std::max(m_max, M);
  r.parameters = {{"alpha", alpha}, {"M_max", static_cast<double>(m_max)}};
  const auto pieces = sqrtx_pieces(alpha, m_max, table, cfg);

  double recombine = 0.0;
  for (const auto& p : pieces) recombine = std::max(recombine, std::abs(p.p1 + p.p2 + p.p3 - p.total));
  if (recombine > 1e-10) r.violations.push_back("pieces do not recombine: " + fmt(recombine));

  const double e = 1.5 - alpha;
  auto scaled = [&](const SqrtxPieces& p, int k) {
    const double mm = static_cast<double>(p.m), w = std::pow(mm, e);
    if (k == 0) return std::abs(p.p1) * w;
    if (k == 1) return std::abs(p.p2) * w;
    return std::abs(p.p3) * w / std::max(1.0, std::log(mm));
  };
  const std::size_t fit_upto = std::max<std::size_t>(1, m_max / 4);
  double C[3] = {0.0, 0.0, 0.0};
  for (const auto& p : pieces)
    if (p.m <= fit_upto)
      for (int k = 0; k < 3; ++k) C[k] = std::max(C[k], scaled(p, k));
  for (const auto& p : pieces)
    if (p.m > fit_upto)
      for (int k = 0; k < 3; ++k)
        if (scaled(p, k) > C[k] * (1.0 + 1e-9))
          r.violations.push_back("piece " + std::to_string(k + 1) + " above fitted bound at m=" + std::to_string(p.m));

  std::vector<std::size_t> sorted(Ms.begin(), Ms.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t M : sorted) {
    CompensatedSum<double> n;
    for (std::size_t m = 1; m <= M; ++m)
      n += (1.0 - static_cast<double>(m) / static_cast<double>(M + 1)) * pieces[m - 1].total;
    r.records.push_back({{{"M", static_cast<double>(M)}}, n.value(), 0.0});
  }
  // Uniform bound: sum of |total_m| up to m_max plus the tail of the fitted envelope,
  // int_N^inf (C1 + C2 + C3 log t) t^{-b} dt with b = 3/2 - alpha > 1.
  CompensatedSum<double> abs_sum;
  for (const auto& p : pieces) abs_sum += std::abs(p.total);
  const double N = static_cast<double>(std::max<std::size_t>(m_max, 3)), b1 = e - 1.0;
  const double tail = std::pow(N, -b1) * ((C[0] + C[1]) / b1 + C[2] * (std::log(N) / b1 + 1.0 / (b1 * b1)));
  const double bound = abs_sum.value() + tail;
  double largest = 0.0;
  for (const auto& rec : r.records) largest = std::max(largest, std::abs(rec.value));
  const bool bounded = !r.records.empty() && std::isfinite(bound) && largest <= bound;
  r.summary = {{"C1", C[0]}, {"C2", C[1]}, {"C3", C[2]}, {"recombination_error", recombine},
               {"max_norm", largest}, {"uniform_bound", bound}, {"tail_bound", tail}};
  finish(r, bounded);
  return r;
}

}  // namespace bfk
