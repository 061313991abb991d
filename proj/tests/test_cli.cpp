// End-to-end runs of the installed binary: exit codes, output shape and
// byte-level determinism.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CTOEP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t k = 0; k < header.size(); ++k)
    if (header[k] == name) return k;
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

}  // namespace

TEST(Cli, SolveSmallOrder) {
  const auto r = run("solve --gamma 0.5 --n 2");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  const auto re = column(rows[0], "re_lambda"), im = column(rows[0], "im_lambda");
  // lambda^2 - lambda/2 + 1 = 0 gives 1/4 +- i sqrt(15)/4.
  for (std::size_t k = 1; k <= 2; ++k) {
    EXPECT_NEAR(std::stod(rows[k][re]), 0.25, 1e-14);
    EXPECT_NEAR(std::abs(std::stod(rows[k][im])), std::sqrt(15.0) / 4, 1e-14);
  }
}

TEST(Cli, SolveSpectrumShapeAndStatus) {
  const auto r = run("solve --gamma 0.5 --n 64");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 65u);
  const auto st = column(rows[0], "status"), res = column(rows[0], "eigen_residual");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k][st], "ok");
    EXPECT_LE(std::stod(rows[k][res]), 1e-10);
  }
  const auto u = csv(run("solve --gamma 0.5 --n 10").out);
  EXPECT_EQ(u[1][column(u[0], "status")], "ok_uncertified");
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  for (const char* args : {"solve --gamma 2/5-5j/6 --n 40", "solve --gamma-polar 0.7:0.3 --n 17 --format json",
                           "solve --gamma i/3 --n 9 --vectors --normalize"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, JsonCarriesMeta) {
  const auto r = run("solve --gamma i/3 --n 5 --format json");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["meta"]["schema"], "ctoep-output/1");
  EXPECT_EQ(doc["meta"]["kind"], "spectrum");
  EXPECT_EQ(doc["meta"]["n"], 5);
  EXPECT_EQ(doc["rows"].size(), 5u);
}

TEST(Cli, NormalizedVectorsHaveUnitNorm) {
  const auto r = run("solve --gamma 0.3 --n 6 --vectors --normalize");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 37u);
  std::vector<double> norm(7, 0.0);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double re = std::stod(rows[k][2]), im = std::stod(rows[k][3]);
    norm[std::stoul(rows[k][0])] += re * re + im * im;
  }
  for (std::size_t j = 1; j <= 6; ++j) EXPECT_NEAR(norm[j], 1.0, 1e-13);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("solve --gamma 1.5 --n 8").code, 2);
  EXPECT_EQ(run("solve --n 8").code, 2);
  EXPECT_EQ(run("solve --gamma 0.5").code, 2);
  EXPECT_EQ(run("solve --gamma 0.5 --gamma-polar 0.5:0 --n 8").code, 2);
  EXPECT_EQ(run("solve --gamma abc --n 8").code, 2);
  EXPECT_EQ(run("solve --gamma 0.5 --n 1").code, 2);
  EXPECT_EQ(run("table 4").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ConvergenceFailureExitCode) {
  const auto r = run("solve --gamma 0.5 --n 8 --max-iter 1");
  EXPECT_EQ(r.code, 3);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[1][column(rows[0], "status")], "failed");
}

TEST(Cli, PlotData) {
  const auto pts = csv(run("plot-data --gamma-polar 0.5:0.1 --n 64").out);
  ASSERT_EQ(pts.size(), 65u);
  for (std::size_t k = 1; k < pts.size(); ++k) EXPECT_LT(std::abs(std::stod(pts[k][1])), 2.0);
  const auto r = run("plot-data --gamma 0.9 --theta");
  ASSERT_EQ(r.code, 0);
  const auto map = csv(r.out);
  ASSERT_EQ(map[0], (std::vector<std::string>{"re_z", "im_z", "re_theta", "im_theta"}));
  ASSERT_GT(map.size(), 100u);
  for (std::size_t k = 1; k < map.size(); ++k) {
    if (std::stod(map[k][1]) == 0) {
      EXPECT_LE(std::abs(std::stod(map[k][2])), M_PI / 2);
    }
  }
}

TEST(Cli, TableAgainstPublishedValues) {
  const auto r = run("table 1 --max-n 256");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  const auto dev = column(rows[0], "rel_dev_n3E");
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_LT(std::stod(rows[k][dev]), 0.02);
  const auto t3 = csv(run("table 3 --n 512").out);
  const auto gs = column(t3[0], "G_status"), gd = column(t3[0], "rel_dev_G");
  EXPECT_EQ(t3[1][gs], "compared");
  EXPECT_LT(std::stod(t3[1][gd]), 0.03);
}

TEST(Cli, VerifyExitCodes) {
  const auto ok = run("verify");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("pass"), std::string::npos);
  const auto bad = run("verify --perturb-formula");
  EXPECT_EQ(bad.code, 4);
  EXPECT_NE(bad.out.find("fail"), std::string::npos);
}

TEST(Cli, WritesToFile) {
  const std::string path = ::testing::TempDir() + "ctoep_cli_out.csv";
  std::remove(path.c_str());
  ASSERT_EQ(run("solve --gamma 0.5 --n 4 --out " + path).code, 0);
  FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  char buf[8] = {};
  EXPECT_EQ(std::fread(buf, 1, 2, f), 2u);
  std::fclose(f);
  EXPECT_EQ(std::string(buf, 2), "j,");
  EXPECT_EQ(run("solve --gamma 0.5 --n 4 --out /nonexistent/dir/x.csv").code, 2);
}
