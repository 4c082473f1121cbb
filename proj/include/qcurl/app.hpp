#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qcurl/analysis.hpp"
#include "qcurl/solver.hpp"
#include "qcurl/system.hpp"

namespace qcurl {

/// Bad or inconsistent run configuration.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

enum class OutputFormat { Csv, Markdown, Both };

struct RunConfig {
  std::vector<Scheme> schemes{Scheme::Modified};
  std::vector<int> n{6, 12, 18, 24};
  double tol = 1e-10;
  int quad_order = 6;
  OutputFormat format = OutputFormat::Csv;
  std::vector<Quantity> tasks{Quantity::Errors, Quantity::Superclose, Quantity::Superconv};
  std::string out_dir = ".";
  /// Allows n > 24.
  bool extended = false;
  SolverKind solver = SolverKind::Minres;
};

std::vector<Scheme> parse_schemes(const std::string& s);       // original | modified | both
std::vector<int> parse_n_list(const std::string& s);           // comma separated
std::vector<Quantity> parse_tasks(const std::string& s);       // errors | superclose | superconv | all
OutputFormat parse_format(const std::string& s);               // csv | markdown | both

/// Throws ConfigError or NonDivisibleMesh.
void validate(const RunConfig& config);

struct RunResult {
  std::vector<ConvergenceReport> reports;
  std::vector<std::string> files;
};

/// Runs every (scheme, task) study over the n list and writes one report file
/// per pair and format into config.out_dir. Progress goes to `log`.
RunResult run(const RunConfig& config, std::ostream& log);

/// Base name of the report file for a (scheme, task) pair, without extension.
std::string report_name(Scheme scheme, Quantity task);

}  // namespace qcurl
