#pragma once

#include <string>
#include <vector>

namespace spiderweb {

enum class CheckStatus { pass, fail, undecided };

struct CheckResult {
  std::string suite;
  std::string check;
  std::string params;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
  double runtime_ms = 0;
};

// Optional grid overrides for the CLI; unset fields use the built-in grids.
struct VerifyOptions {
  std::vector<int> ks;  // empty = default
  int nmax = -1;
  long long mmax = -1;
  unsigned seed = 0;  // offsets the fixed seeds of the sampled checks
};

std::vector<CheckResult> criterion_structure(const VerifyOptions& = {});      // 1
std::vector<CheckResult> criterion_line_graphs(const VerifyOptions& = {});    // 2
std::vector<CheckResult> criterion_schreier(const VerifyOptions& = {});       // 3
std::vector<CheckResult> criterion_spectra_exact(const VerifyOptions& = {});  // 4
std::vector<CheckResult> criterion_spectra_closed(const VerifyOptions& = {}); // 5
std::vector<CheckResult> criterion_kesten(const VerifyOptions& = {});         // 6
std::vector<CheckResult> criterion_convergence(const VerifyOptions& = {});    // 7
std::vector<CheckResult> criterion_components(const VerifyOptions& = {});     // 8
std::vector<CheckResult> criterion_transitivity(const VerifyOptions& = {});   // 9
std::vector<CheckResult> criterion_coverings(const VerifyOptions& = {});      // 10
std::vector<CheckResult> criterion_euler_hamilton(const VerifyOptions& = {}); // 11
std::vector<CheckResult> criterion_group_core(const VerifyOptions& = {});     // 12

// Suites exposed by the CLI: tensor, debruijn, schreier, spectra,
// transitivity, coverings, convergence, all.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name,
                                   const VerifyOptions& = {});

}  // namespace spiderweb
