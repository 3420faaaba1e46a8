#include "bfk/acceptance.hpp"
#include "bfk/conjecture_lab.hpp"
#include "bfk/construction.hpp"
#include "bfk/errors.hpp"
#include "bfk/io.hpp"
#include "bfk/kernels.hpp"
#include "bfk/parallel.hpp"
#include "bfk/sequences.hpp"
#include "bfk/special_functions.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace bfk;

namespace {

enum Exit { ok = 0, violated = 1, usage = 2, numerical = 3 };

struct Common {
  std::string out;
  std::string format = "csv";
};

// --out relative to BFK_OUT_DIR when that is set; empty means stdout.
fs::path resolve(const std::string& out, const std::string& fallback_name = "") {
  const char* env = std::getenv("BFK_OUT_DIR");
  if (out.empty()) return env && !fallback_name.empty() ? fs::path(env) / fallback_name : fs::path();
  const fs::path p(out);
  return env && p.is_relative() ? fs::path(env) / p : p;
}

fs::path resolve_dir(const std::string& out) {
  const char* env = std::getenv("BFK_OUT_DIR");
  if (out.empty()) return env ? fs::path(env) : fs::path(".");
  const fs::path p(out);
  return env && p.is_relative() ? fs::path(env) / p : p;
}

void emit(const fs::path& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output file (stdout when omitted and BFK_OUT_DIR is unset)");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

std::size_t max_of(const std::vector<std::size_t>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

ZeroTable table_for(std::size_t count) { return compute_zero_table(std::max<std::size_t>(count, 1)); }

ConvexSeq make_sequence(const std::string& kind, double ratio, std::size_t len) {
  if (kind == "geometric") return geometric_seq(ratio, len - 1);
  if (kind == "log") {
    std::vector<double> a(len / 2);
    for (std::size_t m = 0; m < a.size(); ++m) a[m] = 1.0 / std::log(m + 2.0);
    return convexify(a, len - 1);
  }
  throw DomainError("unknown sequence kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bessel-Fourier kernels, coefficients and numerical checks"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Cap on worker threads (0 = all cores)");

  // zeros
  Common zc;
  std::size_t zcount = 1000;
  auto* zeros = app.add_subcommand("zeros", "Table of the zeros of J0 with certification columns");
  zeros->add_option("--count", zcount, "Number of zeros")->check(CLI::PositiveNumber);
  add_format(zeros, zc);

  // eval-kernel
  Common kc;
  std::string kvariant = "standard";
  double kalpha = 0.5;
  std::size_t kM = 10, kgrid = 10000;
  std::vector<double> kx;
  auto* ek = app.add_subcommand("eval-kernel", "Evaluate a kernel on a grid");
  ek->add_option("--variant", kvariant, "standard, even, odd or fejer");
  ek->add_option("--alpha", kalpha, "Weight exponent");
  ek->add_option("--M", kM, "Kernel order")->required();
  ek->add_option("--grid", kgrid, "Mixed grid density");
  ek->add_option("--x", kx, "Explicit increasing points in [0, 1] instead of the grid")->delimiter(',');
  add_format(ek, kc);

  // coeffs
  Common cc;
  std::string cfun = "one";
  double cexp = -1.5, calpha = 0.0;
  std::size_t cfirst = 1, clast = 20;
  auto* co = app.add_subcommand("coeffs", "Bessel-Fourier coefficients of a model function");
  co->add_option("--function", cfun, "one or power")->check(CLI::IsMember({"one", "power"}));
  co->add_option("--exponent", cexp, "Exponent for --function power");
  co->add_option("--alpha", calpha, "Normalization exponent j_m^alpha");
  co->add_option("--m-first", cfirst)->check(CLI::PositiveNumber);
  co->add_option("--m-last", clast)->check(CLI::PositiveNumber);
  add_format(co, cc);

  // construct
  Common sc;
  std::string seq_kind = "geometric", svariant = "standard";
  double salpha = 0.4, sratio = 0.5;
  std::size_t sL = 40, ssamples = 1000, scoeffs = 0;
  auto* cons = app.add_subcommand("construct", "Build the truncated construction and sample it");
  cons->add_option("--alpha", salpha);
  cons->add_option("--L", sL, "Truncation")->check(CLI::PositiveNumber);
  cons->add_option("--sequence", seq_kind, "geometric or log")->check(CLI::IsMember({"geometric", "log"}));
  cons->add_option("--ratio", sratio, "Ratio of the geometric sequence");
  cons->add_option("--variant", svariant, "standard, even_only or odd_only");
  cons->add_option("--samples", ssamples, "Mixed grid density for the samples");
  cons->add_option("--coeffs", scoeffs, "Also compute f_1..f_n by quadrature (written to <out>.coeffs.csv)");
  add_format(cons, sc);

  // scan
  Common nc;
  std::string target, nvariant = "standard";
  double nalpha = 0.5;
  std::vector<std::size_t> nM = {10, 100, 1000};
  std::size_t ngrid = 10000, nkmax = 50, nMmax = 1000;
  auto* scan = app.add_subcommand("scan", "Grid scans of the kernel and zero-table conjectures");
  scan->add_option("--target", target, "kernel_positivity, lower_bound_constant, j1_monotone, g_minima, "
                                        "divergence_sum, sqrtx_norms or alpha_half")
      ->required();
  scan->add_option("--alpha", nalpha);
  scan->add_option("--M", nM, "Comma-separated kernel orders")->delimiter(',');
  scan->add_option("--grid", ngrid, "Mixed grid density");
  scan->add_option("--variant", nvariant, "Kernel variant");
  scan->add_option("--k-max", nkmax, "Last minimum index for g_minima");
  scan->add_option("--M-max", nMmax, "Range for j1_monotone and divergence_sum");
  add_format(scan, nc);

  // figures
  std::string fname, fout;
  double falpha = 0.5;
  std::vector<std::size_t> fM = {10, 100, 1000};
  std::size_t fgrid = 10000, fMmax = 1000, fsamples = 2000;
  double fymax = 60.0;
  auto* fig = app.add_subcommand("figures", "Write figure data files");
  fig->add_option("--name", fname, "fmplots, j1decreasing or cosrootint")
      ->required()
      ->check(CLI::IsMember({"fmplots", "j1decreasing", "cosrootint"}));
  fig->add_option("--alpha", falpha);
  fig->add_option("--M", fM, "Kernel orders for fmplots")->delimiter(',');
  fig->add_option("--grid", fgrid, "Mixed grid density for fmplots");
  fig->add_option("--M-max", fMmax, "Zeros for j1decreasing");
  fig->add_option("--y-max", fymax, "Range for cosrootint");
  fig->add_option("--samples", fsamples, "Samples for cosrootint");
  fig->add_option("--out", fout, "Output directory (default BFK_OUT_DIR or .)");

  // verify-all
  std::vector<int> only;
  auto* va = app.add_subcommand("verify-all", "Run the acceptance suite");
  va->add_option("--only", only, "Comma-separated criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Exit::ok : Exit::usage;
  }
  set_thread_limit(threads);

  try {
    if (*zeros) {
      const auto t = table_for(zcount);
      const auto bad = t.check();
      std::ostringstream os;
      if (zc.format == "csv") {
        write_zero_table_csv(os, t);
      } else {
        nlohmann::json j = {{"count", t.count()},
                            {"zeros", std::vector<double>(t.zeros().begin(), t.zeros().end())},
                            {"J1_at_zeros", std::vector<double>(t.j1_at_zeros().begin(), t.j1_at_zeros().end())},
                            {"residuals", std::vector<double>(t.residuals().begin(), t.residuals().end())}};
        os << j.dump(1) << '\n';
      }
      emit(resolve(zc.out, "zeros." + zc.format), os.str());
      for (const auto& b : bad) std::cerr << "certification: " << b << '\n';
      return bad.empty() ? Exit::ok : Exit::numerical;
    }

    if (*ek) {
      const KernelSpec spec{kernel_variant_from_string(kvariant), kalpha, kM};
      spec.validate();
      const auto t = table_for(spec.zeros_needed());
      const std::vector<double> grid = kx.empty() ? mixed_grid(kgrid) : kx;
      const auto k = eval_kernel(spec, grid, t);
      const fs::path path = resolve(kc.out, "kernel_" + kvariant + "_" + std::to_string(kM) + "." + kc.format);
      std::ostringstream os;
      if (kc.format == "csv") {
        write_kernel_csv(os, k);
        if (!path.empty()) write_file(fs::path(path.string() + ".json"), to_json(spec).dump(2) + "\n");
      } else {
        auto j = to_json(spec);
        j["x"] = k.grid;
        j["values"] = k.values;
        os << j.dump(1) << '\n';
      }
      emit(path, os.str());
      return Exit::ok;
    }

    if (*co) {
      if (clast < cfirst) throw DomainError("--m-last must be >= --m-first");
      const auto t = table_for(clast);
      const Integrand f = cfun == "one" ? Integrand::constant(1.0) : Integrand::power(cexp);
      const auto rep = bf_coefficients(f, cfirst, clast, calpha, t);
      std::ostringstream os;
      if (cc.format == "csv") {
        write_coeff_csv(os, rep);
      } else {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& e : rep.entries)
          rows.push_back({{"m", e.m}, {"j_m", e.j_m}, {"f_m", e.f_m}, {"f_m_over_jm_alpha", e.normalized},
                          {"err_est", e.error}});
        os << nlohmann::json{{"alpha", rep.alpha}, {"entries", rows}}.dump(1) << '\n';
      }
      emit(resolve(cc.out, "coeffs." + cc.format), os.str());
      return Exit::ok;
    }

    if (*cons) {
      const ConstructionSpec spec{salpha, make_sequence(seq_kind, sratio, sL + 3), sL,
                                  construction_variant_from_string(svariant)};
      spec.validate();
      const std::size_t need = std::max(spec.zeros_needed(), scoeffs);
      const auto t = table_for(need);
      const auto f = build_f(spec, t);
      const fs::path path = resolve(sc.out, "construct." + sc.format);
      auto meta = to_json(spec);
      meta["weighted_l1"] = f.weighted_l1;
      meta["weighted_l1_error"] = f.weighted_l1_error;
      std::ostringstream os;
      if (sc.format == "csv") {
        const auto grid = mixed_grid(ssamples);
        std::vector<double> v(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f.evaluate(grid[i]);
        write_samples_csv(os, grid, v);
        if (!path.empty()) write_file(fs::path(path.string() + ".json"), meta.dump(2) + "\n");
      } else {
        os << meta.dump(2) << '\n';
      }
      emit(path, os.str());
      if (scoeffs > 0) {
        std::ostringstream cs;
        write_coeff_csv(cs, coefficients_of_f(f, 1, scoeffs, t));
        emit(path.empty() ? fs::path() : fs::path(path.string() + ".coeffs.csv"), cs.str());
      }
      return Exit::ok;
    }

    if (*scan) {
      const KernelVariant v = kernel_variant_from_string(nvariant);
      ScanReport r;
      if (target == "alpha_half") {
        r = alpha_half_norm_sum(nM, table_for(max_of(nM)));
      } else {
        switch (scan_target_from_string(target)) {
          case ScanTarget::kernel_positivity:
            r = scan_positivity(nalpha, nM, ngrid, table_for(mode_index(v, max_of(nM))), v);
            break;
          case ScanTarget::lower_bound_constant:
            r = scan_lower_bound(nalpha, nM, ngrid, table_for(mode_index(v, max_of(nM))), v);
            break;
          case ScanTarget::j1_monotone: r = scan_j1_behavior(nMmax, table_for(nMmax)); break;
          case ScanTarget::g_minima: r = scan_g_minima(nalpha, nkmax); break;
          case ScanTarget::divergence_sum: r = divergence_sum(nMmax, table_for(2 * nMmax + 1)); break;
          case ScanTarget::sqrtx_norms: r = scan_sqrtx_norms(nalpha, nM, table_for(max_of(nM))); break;
        }
      }
      std::ostringstream os;
      if (nc.format == "csv")
        write_scan_csv(os, r);
      else
        os << to_json(r).dump(1) << '\n';
      emit(resolve(nc.out, "scan_" + target + "." + nc.format), os.str());
      std::cerr << "verdict: " << to_string(r.verdict) << '\n';
      for (const auto& s : r.violations) std::cerr << "  " << s << '\n';
      return r.verdict == Verdict::violated ? Exit::violated : Exit::ok;
    }

    if (*fig) {
      const fs::path dir = resolve_dir(fout);
      if (fname == "fmplots") {
        for (const auto& p : write_fmplots(dir, falpha, fM, fgrid, table_for(max_of(fM)))) std::cout << p.string() << '\n';
      } else if (fname == "j1decreasing") {
        std::cout << write_j1decreasing(dir, fMmax, table_for(fMmax)).string() << '\n';
      } else {
        std::cout << write_cosrootint(dir, falpha, fymax, fsamples).string() << '\n';
      }
      return Exit::ok;
    }

    if (*va) {
      if (only.empty()) only = acceptance_ids();
      int failed = 0;
      for (int id : only) {
        const int one[] = {id};
        const auto r = run_acceptance(one).at(0);
        std::cout << format_result(r) << std::endl;
        failed += r.passed ? 0 : 1;
      }
      std::cout << failed << " criteria failed\n";
      return failed == 0 ? Exit::ok : Exit::violated;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::numerical;
  }
  return Exit::ok;
}
