// Copyright 2026 The hornrmt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace hornrmt::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

// Data rows of a CSV document, split on commas (no quoted cells).
std::vector<std::vector<std::string>> csv_rows(const std::string& s) {
  std::vector<std::vector<std::string>> rows;
  bool header = true;
  for (const auto& l : lines(s)) {
    if (l.starts_with("#")) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream is(l);
    for (std::string c; std::getline(is, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Cli, GtRatio) {
  const Result r = run({"gt", "ratio", "--n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "# generated-by hornrmt, version 0.1.0, seed 0, args gt ratio --n 2");
  EXPECT_EQ(l[2], "2,25/24,1.0416666666666667");
}

TEST(Cli, Pdf2EigenGrid) {
  const Result r = run({"pdf2", "eigen", "--a", "1,0", "--b", "1,0", "--grid", "0:2:5"});
  EXPECT_EQ(r.code, kExitOk);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[2], (std::vector<std::string>{"1", "0.5"}));
  EXPECT_EQ(rows[4], (std::vector<std::string>{"2", "0"}));
}

TEST(Cli, DefaultGridHas400Points) {
  const Result r = run({"pdf2", "diag", "--a", "2,0", "--b", "1,0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(csv_rows(r.out).size(), 400u);
  EXPECT_NE(r.out.find("# density: orbit-sum-diag"), std::string::npos);
}

TEST(Cli, QjsdClosedForm) {
  const Result r = run({"qjsd", "--mu", "0", "--nu", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(csv_rows(r.out).at(0).at(2), "0.39771572685331513");
}

TEST(Cli, ArgumentErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"qjsd", "--mu", "0.5", "--nu", "0"},
           {"gt", "ratio", "--n", "2", "--frobnicate"},
           {"--bins", "1", "gt", "ratio", "--n", "2"},
           {"--samples", "0", "gt", "empirical", "--n", "2"},
           {"--format", "xml", "gt", "ratio", "--n", "2"},
           {"pdf2", "eigen", "--a", "1,1", "--b", "1,0"},
           {"pdf2", "eigen", "--a", "1,0", "--b", "1,0", "--grid", "0:2"},
           {"wishart-sum", "--m", "3", "--n", "2"},
           {"nonsense"},
           {}}) {
    const Result r = run(args);
    EXPECT_EQ(r.code, kExitUsage) << (args.empty() ? "" : args[0]);
    EXPECT_TRUE(r.out.empty());
    const auto l = lines(r.err);
    EXPECT_EQ(l.size(), 1u) << r.err;
  }
  EXPECT_NE(run({"qjsd", "--mu", "0.5", "--nu", "0"}).err.find("mu"), std::string::npos);
}

TEST(Cli, SeedIsPrintedAndReproducible) {
  const std::vector<std::string> args{"--seed", "17", "--samples", "2000", "gt", "empirical",
                                      "--n", "2"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed 17"), std::string::npos);
  const Result c = run({"--seed", "18", "--samples", "2000", "gt", "empirical", "--n", "2"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, WorkersDoNotChangeOutputValues) {
  const Result a = run({"--samples", "3000", "--workers", "1", "gue-sum", "--n", "2", "--verify"});
  const Result b = run({"--samples", "3000", "--workers", "3", "gue-sum", "--n", "2", "--verify"});
  EXPECT_EQ(csv_rows(a.out), csv_rows(b.out));
}

TEST(Cli, CsvAndJsonCarryIdenticalNumbers) {
  const std::vector<std::vector<std::string>> cases{
      {"single-eig", "--n", "3", "--grid", "-3:3:13"},
      {"--samples", "500", "gt", "empirical", "--n", "3"},
      {"gt", "scan", "--nmax", "8"},
      {"coherence", "--mu", "0.1", "--nu", "0.2"},
      {"surface", "qjsd", "--grid", "3"}};
  for (auto args : cases) {
    const Result csv = run(args);
    args.insert(args.begin(), {"--format", "json"});
    const Result js = run(args);
    ASSERT_EQ(csv.code, kExitOk);
    ASSERT_EQ(js.code, kExitOk);
    const auto rows = csv_rows(csv.out);
    const auto doc = nlohmann::json::parse(js.out);
    ASSERT_EQ(doc["rows"].size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ASSERT_EQ(doc["rows"][i].size(), rows[i].size());
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const auto& cell = doc["rows"][i][j];
        if (cell.is_number())
          EXPECT_EQ(cell.get<double>(), std::stod(rows[i][j])) << args.back();
        else if (cell.is_string())
          EXPECT_EQ(cell.get<std::string>(), rows[i][j]);
      }
    }
  }
}

TEST(Cli, GtScanFit) {
  const Result r = run({"gt", "scan", "--nmax", "20", "--fit", "10:20"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("# fit_slope: "), std::string::npos);
  EXPECT_EQ(csv_rows(r.out).size(), 19u);
}

TEST(Cli, VerifyPathwayReportsAndPasses) {
  const Result r = run({"--samples", "100000", "coherence", "--mu", "0.05", "--nu", "0.4",
                        "--verify"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("diag-mix ks"), std::string::npos);
  const Result w = run({"--samples", "100000", "wishart-sum", "--m", "2", "--n", "2", "--k", "2", "--verify"});
  EXPECT_EQ(w.code, kExitOk) << w.out;
  EXPECT_NE(w.out.find("ks_statistic"), std::string::npos);
}

TEST(Cli, FailedVerifyExitsOne) {
  const Result r = run({"--samples", "2000", "--ks-threshold", "1e-6", "gue-sum", "--n", "2",
                        "--verify"});
  EXPECT_EQ(r.code, kExitNumerical);
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "hornrmt_cli_test.csv";
  const Result a = run({"--out", path.string(), "gt", "ratio", "--n", "3"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_TRUE(a.out.empty());
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  const std::string expected = run({"gt", "ratio", "--n", "3"}).out;
  // Only the args echo differs.
  EXPECT_EQ(lines(file.str()).back(), lines(expected).back());
  std::filesystem::remove(path);
}

TEST(Cli, DerivDemoGolden) {
  for (const auto& [name, args] :
       std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"deriv_gue_n2_k2.csv", {"deriv", "demo", "--ensemble", "gue", "--n", "2", "--k", "2"}},
           {"deriv_wishart_m2_n3_k2.json",
            {"--format", "json", "deriv", "demo", "--ensemble", "wishart", "--m", "2", "--n", "3",
             "--k", "2"}}}) {
    std::ifstream in(std::string(HORNRMT_GOLDEN_DIR) + "/" + name);
    ASSERT_TRUE(in.good()) << name;
    std::stringstream want;
    want << in.rdbuf();
    const Result r = run(args);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, want.str()) << name;
  }
}

}  // namespace
}  // namespace hornrmt::cli
