#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qei::verify {

struct Check {
  int criterion = 0;  // 0 for diagnostics that do not gate the verdict
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct Options {
  unsigned seed = 20240611;
  int counterexample_nodes = 48;
  bool diagnostics = true;
};

// all | fresnel | residues | appendix_a | swec | qei | counterexample | normalization
bool is_known_suite(std::string_view suite);
std::vector<Check> run_suite(std::string_view suite, const Options& opts = {});

std::vector<Check> check_fresnel_factorization(const Options& opts);   // 1
std::vector<Check> check_quasi_inverse(const Options& opts);           // 2
std::vector<Check> check_residues(const Options& opts);                // 3
std::vector<Check> check_polarizations(const Options& opts);           // 4
std::vector<Check> check_energy_matrices(const Options& opts);         // 5
std::vector<Check> check_c_coefficient(const Options& opts);           // 6
std::vector<Check> check_rest_frame_bound(const Options& opts);        // 7
std::vector<Check> check_pipeline(const Options& opts);                // 8
std::vector<Check> check_appendix_a(const Options& opts);              // 9
std::vector<Check> check_normalization(const Options& opts);           // 10
std::vector<Check> check_counterexample(const Options& opts);          // 11
std::vector<Check> check_kernel_positivity(const Options& opts);       // 12

bool all_passed(const std::vector<Check>& checks);
std::string format_line(const Check& c);

}  // namespace qei::verify
