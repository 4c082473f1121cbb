#include "qcurl/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "qcurl/identities.hpp"
#include "qcurl/spaces.hpp"

namespace qcurl {

namespace {

constexpr double kUnisolvenceTol = 1e-8;
constexpr double kInclusionTol = 1e-12;
constexpr double kCommutingTol = 1e-8;
constexpr double kOrthogonalityTol = 1e-12;
constexpr double kNedelecTol = 1e-12;
constexpr double kJumpTol = 1e-10;
constexpr double kStructureTol = 1e-12;
constexpr double kI3hTol = 1e-10;
constexpr double kOracleTol = 1e-8;
constexpr double kOracleSolverTol = 1e-12;

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& options, std::ostream* log) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> results;
  auto record = [&](const std::string& name, double tol, const std::function<double()>& measure) {
    CheckResult r{name, 0.0, tol, false};
    try {
      r.value = measure();
      r.passed = r.value <= tol;
    } catch (const Error& e) {
      r.name += std::string(" (") + e.what() + ")";
      r.value = -1.0;
    }
    if (log) {
      char line[256];
      std::snprintf(line, sizeof line, "%-4s %-44s %.3e (tol %.0e)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.value, r.tolerance);
      *log << line << std::flush;
    }
    results.push_back(r);
  };

  const SpaceLibrary lib = SpaceLibrary::build({options.vk_perturbation});
  for (const ElementSpace* s : {&lib.wk, &lib.vk, &lib.nedelec, &lib.q1, &lib.vm, &lib.wm}) {
    record("unisolvence " + to_string(s->tag), kUnisolvenceTol, [s] { return s->duality_defect(); });
  }
  record("curl V_K in W_K", kInclusionTol, [&] { return curl_inclusion_residual(lib.vk, lib.wk); });
  record("curl V_M in W_M", kInclusionTol, [&] { return curl_inclusion_residual(lib.vm, lib.wm); });
  record("W_K free of mixed monomials", kStructureTol, [&] { return mixed_monomial_defect(lib); });
  record("commuting Pi_K curl = curl I_K", kCommutingTol, [&] { return commuting_defect_cell(lib, 5, 11); });
  record("commuting Pi_M curl_h = curl I_M", kCommutingTol, [&] { return commuting_defect_macro(lib, 3, 12); });
  record("orthogonality grad(w - Pi_K w)", kOrthogonalityTol, [&] { return orthogonality_defect_wk(lib); });
  record("orthogonality (v - I0_K v, grad q)", kOrthogonalityTol, [&] { return orthogonality_defect_vk(lib); });
  record("int_K curl(v - I^C_K v) = 0", kNedelecTol, [&] { return nedelec_curl_defect(lib); });
  record("W_h face-mean jumps", kJumpTol, [&] { return jump_defect(lib, 3, 13); });
  record("I_3h I_h u = I_3h u (n=3)", kI3hTol, [&] { return i3h_consistency_defect(lib, 3); });
  for (Scheme scheme : {Scheme::Original, Scheme::Modified}) {
    DenseOracleResult oracle;
    bool solved = false;
    auto solve = [&] {
      if (!solved) oracle = dense_oracle(lib, 3, scheme, kOracleSolverTol);
      solved = true;
    };
    record("dense oracle n=3 " + to_string(scheme), kOracleTol, [&] {
      solve();
      return oracle.max_coefficient_diff;
    });
    record("pressure vanishes n=3 " + to_string(scheme), kOracleTol, [&] {
      solve();
      return oracle.pressure_max;
    });
  }
  if (log) {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int failed = 0;
    for (const CheckResult& r : results) failed += !r.passed;
    char line[128];
    std::snprintf(line, sizeof line, "%d/%zu checks passed in %.1f s\n", static_cast<int>(results.size()) - failed,
                  results.size(), seconds);
    *log << line;
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace qcurl
