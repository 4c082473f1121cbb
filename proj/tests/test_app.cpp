#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qcurl/app.hpp"

using namespace qcurl;

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(::testing::TempDir()) / ("qcurl_" + name);
  fs::remove_all(p);
  return p;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QCURL_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, Parsing) {
  EXPECT_EQ(parse_schemes("both").size(), 2u);
  EXPECT_EQ(parse_schemes("original").front(), Scheme::Original);
  EXPECT_THROW(parse_schemes("new"), ConfigError);
  EXPECT_EQ(parse_n_list("6, 12,18"), (std::vector<int>{6, 12, 18}));
  EXPECT_THROW(parse_n_list("6,x"), ConfigError);
  EXPECT_THROW(parse_n_list(""), ConfigError);
  EXPECT_EQ(parse_tasks("all").size(), 3u);
  EXPECT_EQ(parse_tasks("superclose,errors").front(), Quantity::Superclose);
  EXPECT_THROW(parse_tasks("plots"), ConfigError);
  EXPECT_EQ(parse_format("markdown"), OutputFormat::Markdown);
  EXPECT_THROW(parse_format("json"), ConfigError);
}

TEST(Config, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(validate(c));
  c.n = {4};
  EXPECT_THROW(validate(c), NonDivisibleMesh);
  c.tasks = {Quantity::Errors};
  EXPECT_NO_THROW(validate(c));
  c.n = {36};
  EXPECT_THROW(validate(c), ConfigError);
  c.extended = true;
  EXPECT_NO_THROW(validate(c));
  c.n = {0};
  EXPECT_THROW(validate(c), ConfigError);
  c.n = {6, 6};
  EXPECT_THROW(validate(c), ConfigError);
  c.n = {6};
  c.tol = 0.0;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Run, BothSchemesWriteTwoReports) {
  RunConfig c;
  c.schemes = parse_schemes("both");
  c.n = {6};
  c.tasks = {Quantity::Errors};
  c.out_dir = scratch("both").string();
  std::ostringstream log;
  const RunResult r = run(c, log);
  ASSERT_EQ(r.reports.size(), 2u);
  ASSERT_EQ(r.files.size(), 2u);
  for (const std::string& f : r.files) EXPECT_TRUE(fs::exists(f));
  EXPECT_EQ(r.reports[0].scheme, Scheme::Original);
  EXPECT_EQ(r.reports[1].scheme, Scheme::Modified);
  EXPECT_NE(r.reports[0].errors[0].curl, r.reports[1].errors[0].curl);
}

TEST(Run, DeterministicOutput) {
  const fs::path first = scratch("det1");
  const fs::path second = scratch("det2");
  RunConfig c;
  c.n = {3, 6};
  std::ostringstream log;
  c.out_dir = first.string();
  run(c, log);
  c.out_dir = second.string();
  run(c, log);
  for (const char* f : {"errors_modified.csv", "superclose_modified.csv", "superconv_modified.csv"}) {
    std::ifstream a(first / f), b(second / f);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_FALSE(sa.str().empty());
    EXPECT_EQ(sa.str(), sb.str()) << f;
  }
}

TEST(Cli, ModifiedErrorsCsvMatchesPublishedRows) {
  const fs::path out = scratch("cli_errors");
  ASSERT_EQ(run_cli("--scheme modified --n 6,12 --task errors --out " + out.string()), 0);
  const auto rows = read_csv(out / "errors_modified.csv");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0][0], "n");
  const double expect[2][3] = {{4.332e1, 1.836, 2.344e-1}, {2.159e1, 4.734e-1, 1.081e-1}};
  for (int r = 0; r < 2; ++r) {
    ASSERT_EQ(rows[r + 1].size(), 7u);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::stod(rows[r + 1][1 + 2 * k]) / expect[r][k], 1.0, 0.02);
  }
  EXPECT_TRUE(rows[1][2].empty());
  EXPECT_FALSE(rows[2][2].empty());
}

TEST(Cli, ExitCodes) {
  const fs::path out = scratch("cli_codes");
  EXPECT_EQ(run_cli("--n 4 --task superconv --out " + out.string()), 2);
  EXPECT_EQ(run_cli("--scheme hybrid --out " + out.string()), 2);
  EXPECT_EQ(run_cli("--n 48 --task errors --out " + out.string()), 2);
  EXPECT_EQ(run_cli("--no-such-flag"), 2);
  EXPECT_EQ(run_cli("--n 3 --task errors --tol 1e-30 --out " + out.string()), 3);
  EXPECT_EQ(run_cli("--selftest"), 0);
  EXPECT_EQ(run_cli("--selftest --perturb-vk 1e-3"), 4);
}

TEST(Cli, ConfigFileAndEnvironment) {
  const fs::path dir = scratch("cli_cfg");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.ini");
    cfg << "scheme=original\nn=3\ntask=errors\nformat=both\n";
  }
  const std::string full = "env QCURL_OUT_DIR=" + (dir / "out").string() + " " + std::string(QCURL_CLI) +
                           " --config " + (dir / "run.ini").string() + " > /dev/null 2>&1";
  ASSERT_EQ(std::system(full.c_str()), 0) << full;
  EXPECT_TRUE(fs::exists(dir / "out" / "errors_original.csv"));
  EXPECT_TRUE(fs::exists(dir / "out" / "errors_original.md"));
}
