#include "doctest.h"

#include "bfk/errors.hpp"
#include "bfk/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace bfk;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fmt17 round-trips doubles") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(u(rng), static_cast<int>(i % 60) - 30);
    CHECK(std::strtod(fmt17(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("zero table CSV") {
  const auto t = compute_zero_table(20);
  std::ostringstream os;
  write_zero_table_csv(os, t, 10);
  const auto ls = lines(os.str());
  REQUIRE(ls.size() == 11);
  CHECK(ls[0] == "m,j_m,J1_at_j_m,residual,mcmahon_eps");
  double j1 = 0.0;
  CHECK(std::sscanf(ls[1].c_str(), "1,%lf", &j1) == 1);
  CHECK(j1 == t.zero(1));
  CHECK_THROWS_AS(write_zero_table_csv(os, t, 21), RangeError);
}

TEST_CASE("convex, coefficient and sample CSVs") {
  const std::vector<double> a = {4.0, 3.0, 1.0};
  const auto c = convexify(a, 6);
  std::ostringstream os;
  write_convex_csv(os, a, c);
  const auto ls = lines(os.str());
  CHECK(ls[0] == "m,a_m,c_m,second_diff");
  CHECK(ls.size() == c.size() + 1);
  CHECK(ls.back().rfind(std::to_string(c.size() - 1) + ",,", 0) == 0);

  const auto t = compute_zero_table(10);
  std::ostringstream co;
  write_coeff_csv(co, bf_coefficients(Integrand::constant(1.0), 1, 3, 0.0, t));
  CHECK(lines(co.str()).size() == 4);
  CHECK(lines(co.str())[0] == "m,j_m,f_m,f_m_over_jm_alpha,err_est");

  const double x[] = {0.0, 1.0}, y[] = {1.0};
  std::ostringstream bad;
  CHECK_THROWS_AS(write_samples_csv(bad, x, y), DomainError);
}

TEST_CASE("scan report serialization") {
  const auto t = compute_zero_table(50);
  const std::size_t Ms[] = {0, 5};
  const auto r = scan_positivity(0.5, Ms, 200, t);
  const auto j = to_json(r);
  CHECK(j["target"] == "kernel_positivity");
  CHECK(j["verdict"] == to_string(r.verdict));
  CHECK(j["records"].size() == 2);
  CHECK(j["records"][0]["value"].get<double>() == 1.0);
  std::ostringstream a, b;
  write_scan_csv(a, r);
  write_scan_csv(b, scan_positivity(0.5, Ms, 200, t));
  CHECK(a.str() == b.str());
  CHECK(lines(a.str())[0] == "M,eval_tol,grid_arg,grid_min,slack,value,arg");
}

TEST_CASE("figure files") {
  const fs::path dir = fs::temp_directory_path() / "bfk_test_io_figures";
  fs::remove_all(dir);
  const auto t = compute_zero_table(100);
  const std::size_t Ms[] = {10, 20};
  const auto paths = write_fmplots(dir, 0.5, Ms, 100, t);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].filename() == "fmplots_10.csv");
  CHECK(fs::exists(dir / "fmplots_20.json"));
  const auto ls = lines(slurp(paths[0]));
  CHECK(ls[0] == "x,value");
  CHECK(ls.size() == mixed_grid(100).size() + 1);
  const auto first = slurp(paths[0]);
  write_fmplots(dir, 0.5, Ms, 100, t);
  CHECK(slurp(paths[0]) == first);

  const auto j1 = lines(slurp(write_j1decreasing(dir, 30, t)));
  CHECK(j1.size() == 31);
  const auto cr = lines(slurp(write_cosrootint(dir, 0.25, 20.0, 50)));
  CHECK(cr.size() == 51);
  CHECK(cr[0] == "v,integrand,G");
  CHECK_THROWS_AS(write_cosrootint(dir, 0.5, 20.0, 50), DomainError);
  fs::remove_all(dir);
}
