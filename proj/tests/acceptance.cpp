// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <string>
#include <vector>

#include "spiderweb/verify.hpp"

namespace {

struct Criterion {
  const char* name;
  std::vector<spiderweb::CheckResult> (*run)(const spiderweb::VerifyOptions&);
};

}  // namespace

int main() {
  using namespace spiderweb;
  const Criterion criteria[] = {
      {" 1 structure: spider web = de Bruijn (x) cycle", criterion_structure},
      {" 2 line graphs: explicit phi for B and Gamma", criterion_line_graphs},
      {" 3 Schreier identification of de Bruijn graphs", criterion_schreier},
      {" 4 exact factored characteristic polynomials", criterion_spectra_exact},
      {" 5 closed-form spectra vs eigensolver", criterion_spectra_closed},
      {" 6 Kesten limit measure", criterion_kesten},
      {" 7 Benjamini-Schramm ball statistics", criterion_convergence},
      {" 8 component counts of tensor cycles", criterion_components},
      {" 9 transitivity iff M >= N", criterion_transitivity},
      {"10 covering towers", criterion_coverings},
      {"11 Euler circuits and Hamiltonian cycles", criterion_euler_hamilton},
      {"12 lamplighter group core", criterion_group_core},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::vector<CheckResult> results = c.run({});
    int bad = 0;
    double ms = 0;
    for (const CheckResult& r : results) {
      if (r.status != CheckStatus::pass) {
        ++bad;
        std::printf("    FAILING CHECK %s [%s]: %s\n", r.check.c_str(),
                    r.params.c_str(), r.detail.c_str());
      }
      ms += r.runtime_ms;
    }
    std::printf("%s  criterion %s  (%zu checks, %.0f ms)\n",
                bad == 0 ? "PASS" : "FAIL", c.name, results.size(), ms);
    std::fflush(stdout);
    failures += bad;
  }
  return failures == 0 ? 0 : 1;
}
