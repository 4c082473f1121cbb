#include "qcurl/app.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "qcurl/interp.hpp"
#include "qcurl/mms.hpp"

namespace qcurl {

namespace {

constexpr int kDeskScaleMax = 24;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void write_file(const std::filesystem::path& path, const std::string& text, RunResult& result) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  result.files.push_back(path.string());
}

}  // namespace

std::vector<Scheme> parse_schemes(const std::string& s) {
  if (s == "original") return {Scheme::Original};
  if (s == "modified") return {Scheme::Modified};
  if (s == "both") return {Scheme::Original, Scheme::Modified};
  throw ConfigError("unknown scheme '" + s + "' (original | modified | both)");
}

std::vector<int> parse_n_list(const std::string& s) {
  std::vector<int> out;
  for (const std::string& item : split_list(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ConfigError("bad mesh size '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty n list");
  return out;
}

std::vector<Quantity> parse_tasks(const std::string& s) {
  std::vector<Quantity> out;
  for (const std::string& item : split_list(s)) {
    if (item == "all") return {Quantity::Errors, Quantity::Superclose, Quantity::Superconv};
    if (item == "errors") out.push_back(Quantity::Errors);
    else if (item == "superclose") out.push_back(Quantity::Superclose);
    else if (item == "superconv") out.push_back(Quantity::Superconv);
    else throw ConfigError("unknown task '" + item + "' (errors | superclose | superconv | all)");
  }
  if (out.empty()) throw ConfigError("empty task list");
  return out;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "markdown") return OutputFormat::Markdown;
  if (s == "both") return OutputFormat::Both;
  throw ConfigError("unknown format '" + s + "' (csv | markdown | both)");
}

void validate(const RunConfig& config) {
  if (config.schemes.empty()) throw ConfigError("no scheme selected");
  if (config.tasks.empty()) throw ConfigError("no task selected");
  if (config.n.empty()) throw ConfigError("empty n list");
  if (!(config.tol > 0.0)) throw ConfigError("solver tolerance must be positive");
  if (config.quad_order < 1 || config.quad_order > 10) throw ConfigError("quadrature order must be in 1..10");
  for (std::size_t i = 0; i < config.n.size(); ++i) {
    const int n = config.n[i];
    if (n <= 0) throw ConfigError("mesh size must be positive, got " + std::to_string(n));
    if (n > kDeskScaleMax && !config.extended) {
      throw ConfigError("n=" + std::to_string(n) + " exceeds " + std::to_string(kDeskScaleMax) +
                        "; pass --extended to run it");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (config.n[j] == n) throw ConfigError("repeated mesh size n=" + std::to_string(n));
    }
  }
  for (Quantity q : config.tasks) {
    if (q != Quantity::Superconv) continue;
    for (int n : config.n) {
      if (n % 3 != 0) throw NonDivisibleMesh(n);
    }
  }
}

std::string report_name(Scheme scheme, Quantity task) { return to_string(task) + "_" + to_string(scheme); }

RunResult run(const RunConfig& config, std::ostream& log) {
  validate(config);
  for (int n : config.n) {
    if (n > kDeskScaleMax) log << "warning: n=" << n << " may take hours and several GB of memory\n";
  }
  const SpaceLibrary& lib = reference_spaces();
  const ReferenceMatrices ref = ReferenceMatrices::build(lib);
  const CellTabulation tab = CellTabulation::build(lib, config.quad_order);
  const ExactFields& u = manufactured_solution();
  const FieldSampler exact = sampler(u);
  const VectorFunction f = [&u](const Vec3& x) { return u.f(x); };

  std::map<std::pair<Scheme, Quantity>, ConvergenceReport> reports;
  for (Scheme s : config.schemes) {
    for (Quantity q : config.tasks) reports[{s, q}] = ConvergenceReport{s, q, {}, {}};
  }
  bool need_ih = false;
  for (Quantity q : config.tasks) need_ih |= q == Quantity::Superclose;

  for (int n : config.n) {
    const auto t0 = std::chrono::steady_clock::now();
    const GlobalDofMap dofs{BrickMesh(n)};
    SaddleSystem system{assemble_A(dofs, ref), assemble_B(dofs, ref), {}};
    DofVector ih_u;
    if (need_ih) ih_u = global_Ih(u, dofs, {true, config.quad_order});
    log << "n=" << n << ": " << system.num_velocity() << " velocity + " << system.num_pressure()
        << " pressure unknowns, assembled in " << seconds_since(t0) << " s\n";
    for (Scheme s : config.schemes) {
      const auto t1 = std::chrono::steady_clock::now();
      system.rhs_u = assemble_rhs(dofs, tab, f, s);
      const SolveResult sol = solve_saddle(system, {config.solver, config.tol, 0});
      log << "  " << to_string(s) << ": " << to_string(config.solver) << " " << sol.iterations
          << " iterations, residual " << sol.relative_residual << ", " << seconds_since(t1) << " s\n";
      for (Quantity q : config.tasks) {
        ErrorTriple e;
        switch (q) {
          case Quantity::Errors: e = error_vs_exact(sol.u, dofs, tab, exact); break;
          case Quantity::Superclose: e = superclose_error(sol.u, ih_u, dofs, ref); break;
          case Quantity::Superconv: e = superconvergent_error(sol.u, dofs, lib, tab, exact); break;
        }
        char line[160];
        std::snprintf(line, sizeof line, "  %-10s %.4e %.4e %.4e\n", to_string(q).c_str(), e.grad_curl, e.curl,
                      e.value);
        log << line << std::flush;
        reports[{s, q}].add(n, e);
      }
    }
  }

  RunResult result;
  const std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  for (Scheme s : config.schemes) {
    for (Quantity q : config.tasks) {
      const ConvergenceReport& r = reports[{s, q}];
      const std::string base = report_name(s, q);
      if (config.format != OutputFormat::Markdown) write_file(dir / (base + ".csv"), r.to_csv(), result);
      if (config.format != OutputFormat::Csv) write_file(dir / (base + ".md"), r.to_markdown(), result);
      result.reports.push_back(r);
    }
  }
  return result;
}

}  // namespace qcurl
