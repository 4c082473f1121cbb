#include <iostream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "qcurl/app.hpp"
#include "qcurl/selftest.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kSolver = 3, kInvariant = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Nonconforming brick element for the 3D quad-curl problem: convergence studies and self-checks"};
  cli.set_config("--config", "", "key=value file with any of the long options below");

  std::string scheme = "modified";
  std::string n_list = "6,12,18,24";
  std::string task = "all";
  std::string format = "csv";
  std::string solver = "minres";
  std::string out_dir = ".";
  double tol = 1e-10;
  int quad_order = 6;
  int threads = 0;
  bool extended = false;
  bool selftest = false;
  double perturb_vk = 0.0;

  cli.add_option("--scheme", scheme, "original | modified | both")->capture_default_str();
  cli.add_option("--n", n_list, "comma-separated mesh sizes (n x n x n cells)")->capture_default_str();
  cli.add_option("--task", task, "errors | superclose | superconv | all (comma list allowed)")->capture_default_str();
  cli.add_option("--tol", tol, "relative residual target of the saddle solve")->capture_default_str();
  cli.add_option("--quad-order", quad_order, "Gauss points per axis for f and error integrals")
      ->capture_default_str();
  cli.add_option("--out", out_dir, "output directory for report files")->envname("QCURL_OUT_DIR")
      ->capture_default_str();
  cli.add_option("--format", format, "csv | markdown | both")->capture_default_str();
  cli.add_option("--solver", solver, "minres | direct")->capture_default_str();
  cli.add_option("--threads", threads, "OpenMP threads (default: OMP_NUM_THREADS or all cores)");
  cli.add_flag("--extended", extended, "allow n > 24 (long runtime, several GB)");
  cli.add_flag("--selftest", selftest, "run the invariant battery and exit");
  cli.add_option("--perturb-vk", perturb_vk, "fault injection into one V_K spanning field")->group("");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  if (threads < 0) {
    std::cerr << "error: --threads must be non-negative\n";
    return kConfig;
  }
  if (threads > 0) omp_set_num_threads(threads);

  if (selftest) {
    const auto results = qcurl::run_selftest({perturb_vk}, &std::cout);
    return qcurl::all_passed(results) ? kOk : kInvariant;
  }

  try {
    qcurl::RunConfig config;
    config.schemes = qcurl::parse_schemes(scheme);
    config.n = qcurl::parse_n_list(n_list);
    config.tasks = qcurl::parse_tasks(task);
    config.format = qcurl::parse_format(format);
    config.solver = qcurl::solver_from_string(solver);
    config.tol = tol;
    config.quad_order = quad_order;
    config.out_dir = out_dir;
    config.extended = extended;
    const qcurl::RunResult result = qcurl::run(config, std::cerr);
    for (const std::string& file : result.files) std::cout << file << "\n";
  } catch (const qcurl::MaxIterations& e) {
    std::cerr << "solver failure: " << e.what() << " (residual " << e.residual() << ")\n";
    return kSolver;
  } catch (const qcurl::SingularSystem& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kSolver;
  } catch (const qcurl::InvalidArgument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const qcurl::NonDivisibleMesh& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const qcurl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
