#include "bfk/io.hpp"

#include "bfk/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace bfk {

namespace fs = std::filesystem;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_zero_table_csv(std::ostream& os, const ZeroTable& table, std::size_t count) {
  if (count == 0) count = table.count();
  if (count > table.count()) throw RangeError("write_zero_table_csv: table has only " + std::to_string(table.count()) + " zeros");
  os << "m,j_m,J1_at_j_m,residual,mcmahon_eps\n";
  for (std::size_t m = 1; m <= count; ++m)
    os << m << ',' << fmt17(table.zero(m)) << ',' << fmt17(table.j1_at_zero(m)) << ',' << fmt17(table.residual(m))
       << ',' << fmt17(table.mcmahon_eps(m)) << '\n';
}

void write_kernel_csv(std::ostream& os, const KernelEval& k) {
  write_samples_csv(os, k.grid, k.values);
}

nlohmann::json to_json(const KernelSpec& spec) {
  return {{"variant", to_string(spec.variant)}, {"alpha", spec.alpha}, {"M", spec.M}};
}

void write_convex_csv(std::ostream& os, std::span<const double> source, const ConvexSeq& seq) {
  os << "m,a_m,c_m,second_diff\n";
  for (std::size_t m = 0; m < seq.size(); ++m) {
    os << m << ',';
    if (m < source.size()) os << fmt17(source[m]);
    os << ',' << fmt17(seq[m]) << ',';
    if (m < seq.second_diffs.size()) os << fmt17(seq.second_diffs[m]);
    os << '\n';
  }
}

void write_coeff_csv(std::ostream& os, const CoeffReport& rep) {
  os << "m,j_m,f_m,f_m_over_jm_alpha,err_est\n";
  for (const auto& e : rep.entries)
    os << e.m << ',' << fmt17(e.j_m) << ',' << fmt17(e.f_m) << ',' << fmt17(e.normalized) << ',' << fmt17(e.error)
       << '\n';
}

nlohmann::json to_json(const ConstructionSpec& spec) {
  return {{"alpha", spec.alpha},
          {"truncation_L", spec.truncation_L},
          {"variant", to_string(spec.variant)},
          {"sequence", spec.seq.values}};
}

void write_samples_csv(std::ostream& os, std::span<const double> x, std::span<const double> values) {
  if (x.size() != values.size()) throw DomainError("write_samples_csv: length mismatch");
  os << "x,value\n";
  for (std::size_t i = 0; i < x.size(); ++i) os << fmt17(x[i]) << ',' << fmt17(values[i]) << '\n';
}

nlohmann::json to_json(const ScanReport& r) {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& rec : r.records) recs.push_back({{"params", rec.params}, {"value", rec.value}, {"arg", rec.arg}});
  return {{"target", to_string(r.target)},   {"verdict", to_string(r.verdict)}, {"parameters", r.parameters},
          {"summary", r.summary},            {"violations", r.violations},      {"records", recs}};
}

void write_scan_csv(std::ostream& os, const ScanReport& r) {
  std::set<std::string> names;
  for (const auto& rec : r.records)
    for (const auto& [k, v] : rec.params) names.insert(k);
  for (const auto& n : names) os << n << ',';
  os << "value,arg\n";
  for (const auto& rec : r.records) {
    for (const auto& n : names) {
      if (auto it = rec.params.find(n); it != rec.params.end()) os << fmt17(it->second);
      os << ',';
    }
    os << fmt17(rec.value) << ',' << fmt17(rec.arg) << '\n';
  }
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::vector<fs::path> write_fmplots(const fs::path& dir, double alpha, std::span<const std::size_t> Ms,
                                    std::size_t grid_density, const ZeroTable& table) {
  const auto grid = mixed_grid(grid_density);
  const auto fam = eval_kernel_family(KernelVariant::standard, alpha, Ms, grid, table);
  std::vector<fs::path> out;
  for (std::size_t k = 0; k < Ms.size(); ++k) {
    const std::string stem = "fmplots_" + std::to_string(Ms[k]);
    std::ostringstream csv;
    write_samples_csv(csv, grid, fam[k]);
    write_file(dir / (stem + ".csv"), csv.str());
    auto meta = to_json(KernelSpec{KernelVariant::standard, alpha, Ms[k]});
    meta["grid_density"] = grid_density;
    meta["grid_points"] = grid.size();
    write_file(dir / (stem + ".json"), meta.dump(2) + "\n");
    out.push_back(dir / (stem + ".csv"));
  }
  return out;
}

fs::path write_j1decreasing(const fs::path& dir, std::size_t M_max, const ZeroTable& table) {
  table.require(std::max<std::size_t>(M_max, 1), "write_j1decreasing");
  std::ostringstream csv;
  csv << "m,j_m,abs_J1,sqrt_j_abs_J1\n";
  for (std::size_t m = 1; m <= M_max; ++m) {
    const double j = table.zero(m), a = std::abs(table.j1_at_zero(m));
    csv << m << ',' << fmt17(j) << ',' << fmt17(a) << ',' << fmt17(std::sqrt(j) * a) << '\n';
  }
  write_file(dir / "j1decreasing.csv", csv.str());
  return dir / "j1decreasing.csv";
}

fs::path write_cosrootint(const fs::path& dir, double alpha, double y_max, std::size_t samples) {
  if (!(alpha >= 0.0 && alpha < 0.5) || !(y_max > 0.0) || samples < 2)
    throw DomainError("write_cosrootint: need alpha in [0, 1/2), y_max > 0, samples >= 2");
  std::ostringstream csv;
  csv << "v,integrand,G\n";
  for (std::size_t i = 1; i <= samples; ++i) {
    const double v = y_max * static_cast<double>(i) / static_cast<double>(samples);
    const double g = oscillatory_gh(v, alpha).first;
    csv << fmt17(v) << ',' << fmt17(std::cos(v) * std::pow(v, alpha - 0.5)) << ',' << fmt17(g) << '\n';
  }
  write_file(dir / "cosrootint.csv", csv.str());
  return dir / "cosrootint.csv";
}

}  // namespace bfk
