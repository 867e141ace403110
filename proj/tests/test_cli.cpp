// Copyright 2026 The Werner Decomposition Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "werner/cli.hpp"

namespace werner {
namespace {

using io::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const char* env_seed = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, env_seed);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "werner_cli_" + name;
}

TEST(Cli, ReportSeparableJson) {
  const auto r = run({"report", "--p", "2", "--f", "0.9", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "SEPARABLE");
  EXPECT_LT(j["residual"].get<double>(), 1e-9);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ReportEntangledExitsTwo) {
  const auto r = run({"report", "--p", "2", "--f", "-0.3", "--format", "json"});
  EXPECT_EQ(r.code, 2);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "ENTANGLED");
  EXPECT_NEAR(j["min_pt_eigenvalue"].get<double>(), -0.075, 1e-15);
  EXPECT_EQ(json::parse(r.err)["error"], "entangled");
}

TEST(Cli, PptNegative) {
  const auto r = run({"ppt", "--p", "1", "--f", "-0.5"});
  EXPECT_EQ(r.code, 2);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "NOT PPT");
  EXPECT_EQ(j["min_pt_eigenvalue"].get<double>(), -0.25);
}

TEST(Cli, PptPositive) {
  const auto r = run({"ppt", "--p", "2", "--f", "0.7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["verdict"], "PPT");
}

TEST(Cli, DecomposeClass) {
  const auto r = run({"decompose", "--p", "2", "--f", "1", "--scheme", "class"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto dec = io::decomposition_from_json(json::parse(r.out));
  ASSERT_EQ(dec.terms.size(), 20u);
  for (const auto& t : dec.terms) EXPECT_EQ(t.weight, 0.05);
  EXPECT_EQ(dec.scheme, Scheme::commuting_class);
}

TEST(Cli, DecomposeOutOfRange) {
  const auto r = run({"decompose", "--p", "2", "--f", "0.6", "--scheme", "per-string"});
  EXPECT_EQ(r.code, 2);
  const auto e = json::parse(r.err);
  EXPECT_EQ(e["error"], "range");
  EXPECT_EQ(e["valid_range"], json::array({0.0, 0.5}));
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, DecomposeVerifyRoundTrip) {
  const std::string path = temp_path("dec.json");
  const auto d = run({"decompose", "--p", "2", "--f", "0.35", "--output", path});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_TRUE(d.out.empty());
  const auto v = run({"verify", "--p", "2", "--f", "0.35", "--input", path});
  ASSERT_EQ(v.code, 0) << v.err;
  const auto j = json::parse(v.out);
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["n_terms"].get<int>(), 20);
  const auto wrong = run({"verify", "--p", "2", "--f", "0.6", "--input", path});
  EXPECT_EQ(wrong.code, 2);
  std::remove(path.c_str());
}

TEST(Cli, VerifyRejectsMalformedInput) {
  const std::string path = temp_path("bad.json");
  std::ofstream(path) << "{\"p\": 1}";
  const auto r = run({"verify", "--p", "1", "--f", "0.5", "--input", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"], "invalid_input");
  std::remove(path.c_str());
  const auto missing = run({"verify", "--p", "1", "--f", "0.5", "--input", path});
  EXPECT_EQ(missing.code, 1);
  const auto e = json::parse(missing.err);
  EXPECT_EQ(e["error"], "io");
  EXPECT_EQ(e["path"], path);
}

TEST(Cli, RefineProducesPureTerms) {
  const auto r = run({"refine", "--p", "2", "--f", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto dec = io::decomposition_from_json(json::parse(r.out));
  EXPECT_TRUE(verify_decomposition(dec, {1e-8, true}).verdict);
}

TEST(Cli, PartitionText) {
  const auto r = run({"partition", "--p", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "IZ ZI ZZ");
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 5u);
}

TEST(Cli, SpectrumRoutesAgree) {
  const auto r = run({"spectrum", "--p", "2", "--f", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["rho"]["closed_form"][0]["multiplicity"].get<int>(), 6);
  EXPECT_EQ(j["rho"]["closed_form"][1]["value"].get<double>(), 0.1);
  EXPECT_EQ(j["rho"]["jacobi"][1]["multiplicity"].get<int>(), 10);
}

TEST(Cli, BuildMatrix) {
  const auto r = run({"build", "--p", "1", "--f", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["trace"].get<double>(), 1.0);
  EXPECT_LT(j["invariance_residual"].get<double>(), 1e-9);
}

TEST(Cli, SweepPtColumn) {
  const auto r = run({"sweep", "--p", "1", "--f-start", "0", "--f-end", "1",
                      "--f-step", "0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    const double f = std::stod(line.substr(0, line.find(',')));
    const auto c1 = line.find(',', line.find(',') + 1);
    const double pt = std::stod(line.substr(c1 + 1, line.find(',', c1 + 1) - c1 - 1));
    EXPECT_NEAR(pt, std::min(f / 2, (2 - f) / 6), 1e-15);
    ++rows;
  }
  EXPECT_EQ(rows, 5);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"ppt", "--p", "1", "--f", "0.1", "--bogus"}).code, 1);
  EXPECT_EQ(run({"ppt", "--p", "9", "--f", "0.1"}).code, 1);
  EXPECT_EQ(run({"ppt", "--p", "1"}).code, 1);
  const auto r = run({"ppt", "--p", "1", "--f", "1.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"], "range");
  EXPECT_EQ(run({"report", "--p", "1", "--f", "0.5"}, "notanumber").code, 1);
}

TEST(Cli, HelpSucceeds) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("report"), std::string::npos);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"report", "--p", "2", "--f", "0.4", "--seed", "7"},
           {"build", "--p", "2", "--f", "0.4"},
           {"sweep", "--p", "2", "--f-step", "0.25"}}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, EnvironmentSeedOverridesFlag) {
  const std::vector<std::string> args{"build", "--p", "2", "--f", "0.4", "--seed", "1"};
  const auto flag = json::parse(run(args).out);
  const auto env = json::parse(run(args, "99").out);
  EXPECT_EQ(flag["seed"].get<std::uint64_t>(), 1u);
  EXPECT_EQ(env["seed"].get<std::uint64_t>(), 99u);
}

}  // namespace
}  // namespace werner
