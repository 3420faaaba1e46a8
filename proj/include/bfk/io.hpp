#pragma once

#include "bfk/conjecture_lab.hpp"
#include "bfk/construction.hpp"
#include "bfk/kernels.hpp"
#include "bfk/quadrature.hpp"
#include "bfk/sequences.hpp"
#include "bfk/special_functions.hpp"

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace bfk {

// %.17g: round-trips every double.
std::string fmt17(double v);

// m,j_m,J1_at_j_m,residual,mcmahon_eps for m = 1..count (0 = whole table).
void write_zero_table_csv(std::ostream& os, const ZeroTable& table, std::size_t count = 0);
// x,value
void write_kernel_csv(std::ostream& os, const KernelEval& k);
nlohmann::json to_json(const KernelSpec& spec);
// m,a_m,c_m,second_diff; a_m is left empty past the end of `source`.
void write_convex_csv(std::ostream& os, std::span<const double> source, const ConvexSeq& seq);
// m,j_m,f_m,f_m_over_jm_alpha,err_est
void write_coeff_csv(std::ostream& os, const CoeffReport& rep);
nlohmann::json to_json(const ConstructionSpec& spec);
// x,value
void write_samples_csv(std::ostream& os, std::span<const double> x, std::span<const double> values);

nlohmann::json to_json(const ScanReport& r);
// One row per record: the union of parameter names (sorted), then value,arg.
void write_scan_csv(std::ostream& os, const ScanReport& r);

// Writes text to path, creating parent directories. Throws std::runtime_error
// when the file cannot be written.
void write_file(const std::filesystem::path& path, const std::string& text);

// fmplots_{M}.csv (x,value on mixed_grid(grid_density)) plus fmplots_{M}.json
// with the kernel spec, for each M. Returns the CSV paths.
std::vector<std::filesystem::path> write_fmplots(const std::filesystem::path& dir, double alpha,
                                                 std::span<const std::size_t> Ms, std::size_t grid_density,
                                                 const ZeroTable& table);
// j1decreasing.csv: m,j_m,abs_J1,sqrt_j_abs_J1 for m = 1..M_max.
std::filesystem::path write_j1decreasing(const std::filesystem::path& dir, std::size_t M_max,
                                         const ZeroTable& table);
// cosrootint.csv: v,integrand,G with integrand cos(v) v^{alpha-1/2} sampled
// uniformly on (0, y_max] and G its running integral.
std::filesystem::path write_cosrootint(const std::filesystem::path& dir, double alpha, double y_max,
                                       std::size_t samples);

}  // namespace bfk
