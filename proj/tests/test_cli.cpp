// Copyright 2026 The fgu Authors
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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "fgu/cli.hpp"
#include "fgu/io.hpp"

using fgu::Json;
using Catch::Matchers::WithinAbs;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = fgu::cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fgu_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("construct mub at d=3 emits the quartet", "[cli]") {
  const auto r = run({"construct", "--family", "mub", "--dim", "3"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc.at("bases").size() == 4);
  CHECK(doc.at("measurement_sets").size() == 4);
  const auto q = fgu::mub_d3_quartet();
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK(fgu::basis_from_json(doc.at("bases")[t]).vectors() == q[t].vectors());
  }
}

TEST_CASE("construct mum reports kappa", "[cli]") {
  const auto r = run({"construct", "--family", "mum", "--dim", "3", "--s", "0.7"});
  REQUIRE(r.code == 0);
  CHECK_THAT(Json::parse(r.out).at("kappa").get<double>(), WithinAbs(0.66, 1e-12));
  CHECK(run({"construct", "--family", "mum", "--dim", "3"}).code == 2);
  CHECK(run({"construct", "--family", "mub", "--dim", "6"}).code == 2);
  CHECK(run({"construct", "--family", "nonsense", "--dim", "3"}).code == 2);
}

TEST_CASE("bound on MBB permutation stays under the closed form", "[cli]") {
  const auto r = run({"bound", "--family", "mbb", "--dim", "3", "--selection", "0,1,2"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc.at("value").get<double>() <= 0.7183);
  CHECK_THAT(doc.at("closed_form").get<double>(), WithinAbs((1.0 + 2.0 / std::sqrt(3.0)) / 3.0, 1e-15));
  CHECK(doc.at("S").get<double>() == 3.0);
  CHECK(doc.contains("maximizer"));

  const auto nonperm = Json::parse(run({"bound", "--family", "mbb", "--dim", "3", "--selection", "0,0,2"}).out);
  CHECK(nonperm.at("closed_form").is_null());
}

TEST_CASE("construct output round-trips through bound", "[cli]") {
  const auto path = temp_file("mub5.json");
  REQUIRE(run({"construct", "--family", "mub", "--dim", "5", "--out", path.string()}).code == 0);
  const auto from_file = run({"bound", "--input", path.string(), "--selection", "1,2,3,4,0,1"});
  const auto direct = run({"bound", "--family", "mub", "--dim", "5", "--selection", "1,2,3,4,0,1"});
  REQUIRE(from_file.code == 0);
  const auto a = Json::parse(from_file.out);
  const auto b = Json::parse(direct.out);
  CHECK(a.at("value") == b.at("value"));
  CHECK(a.at("closed_form") == b.at("closed_form"));
  std::filesystem::remove(path);
}

TEST_CASE("bound rejects files that fail validation", "[cli]") {
  const auto path = temp_file("bad.json");
  Json doc{{"dim", 2},
           {"kind", "projective"},
           {"elements", Json::array({Json::parse("[[[1,0],[0,0]],[[0,0],[0,0]]]")})}};
  std::ofstream(path) << doc.dump();
  const auto r = run({"bound", "--input", path.string(), "--selection", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("POVM") != std::string::npos);
  std::ofstream(path) << "{not json";
  CHECK(run({"bound", "--input", path.string(), "--selection", "0"}).code == 2);
  std::filesystem::remove(path);
  CHECK(run({"bound", "--input", path.string(), "--selection", "0"}).code == 2);
}

TEST_CASE("bound selection errors map to exit 2", "[cli]") {
  CHECK(run({"bound", "--family", "mub", "--dim", "3"}).code == 2);
  CHECK(run({"bound", "--family", "mub", "--dim", "3", "--selection", "0,1"}).code == 2);
  CHECK(run({"bound", "--family", "mub", "--dim", "3", "--selection", "0,1,x,0"}).code == 2);
  CHECK(run({"bound", "--family", "mub", "--dim", "3", "--selection", "0,0,0,0", "--weights", "1,-1,1,1"}).code == 2);
  CHECK(run({"bound", "--family", "mub", "--dim", "3", "--sets", "0,9", "--selection", "0,0"}).code == 2);
  CHECK(run({"bound", "--family", "mub", "--dim", "3", "--selection", "0,0,0,0", "--format", "xml"}).code == 2);
}

TEST_CASE("bound --all emits one CSV row per selection", "[cli]") {
  const auto r = run({"bound", "--family", "mub", "--dim", "3", "--sets", "0,1,2", "--all", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 28);
  CHECK(rows[0] == std::vector<std::string>{"selection", "exact", "closed_form", "slack"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 4);
    CHECK(std::stod(rows[i][3]) >= -1e-10);
  }
}

TEST_CASE("weighted and discrimination bounds", "[cli]") {
  const auto w = Json::parse(
      run({"bound", "--family", "mub", "--dim", "3", "--selection", "0,0,0,0", "--weights", "1,2,3,4"}).out);
  CHECK(w.at("closed_form").is_null());
  CHECK(w.at("S").get<double>() == 10.0);

  const auto inc = Json::parse(run({"bound", "--family", "discrimination", "--eta", "0.5", "--selection", "0,2"}).out);
  CHECK_THAT(inc.at("value").get<double>(), WithinAbs(inc.at("closed_form").get<double>(), 1e-10));
  const auto mis = Json::parse(run({"bound", "--family", "discrimination", "--eta", "0.5", "--selection", "1,0"}).out);
  CHECK_THAT(mis.at("value").get<double>(), WithinAbs(mis.at("closed_form").get<double>(), 1e-10));

  const auto mum = Json::parse(run({"bound", "--family", "mum", "--dim", "3", "--s", "0.7", "--selection", "0,0,0,0"}).out);
  CHECK(mum.at("normalization") == "weight-sum");
  CHECK(mum.at("value").get<double>() <= mum.at("closed_form").get<double>() + 1e-10);
}

TEST_CASE("sweep over the matched scenario", "[cli]") {
  const auto r = run({"sweep", "--scenario", "matched", "--eta-grid", "0.01:0.99:99"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 100);
  CHECK(rows[0] == std::vector<std::string>{"eta", "closed_form", "exact", "residual"});
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][1]) < std::stod(rows[i - 1][1]));
    CHECK(std::stod(rows[i][3]) < 1e-10);
  }
  CHECK(run({"sweep", "--scenario", "matched", "--eta-grid", "0:2:3"}).code == 2);
  CHECK(run({"sweep", "--scenario", "matched", "--eta-grid", "0:1"}).code == 2);
  CHECK(run({"sweep", "--scenario", "other", "--eta-grid", "0:1:3"}).code == 2);
}

TEST_CASE("sweep over the MUM s grid", "[cli]") {
  const auto r = run({"sweep", "--family", "mum", "--dim", "3", "--s-grid", "0.2:1:9"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == std::vector<std::string>{"s", "kappa", "closed_form", "exact_max", "slack"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) >= -1e-10);
  CHECK(run({"sweep", "--family", "mum", "--dim", "4", "--s-grid", "0.2:1:9"}).code == 2);
}

TEST_CASE("enumerate emits the census", "[cli]") {
  const auto r = run({"enumerate"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 109);
  CHECK(rows[0].back() == "class");
  CHECK(run({"enumerate", "--base-order", "3,2,1,0"}).code == 0);
  CHECK(run({"enumerate", "--base-order", "0,0,1,2"}).code == 2);
}

TEST_CASE("verify reports and exit codes", "[cli]") {
  const auto r = run({"verify", "--suite", "discrimination"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc.at("passed") == true);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"verify", "--samples", "0"}).code == 2);
}

TEST_CASE("identical invocations give identical bytes", "[cli]") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--suite", "d3-census"},
           {"bound", "--family", "mub", "--dim", "5", "--selection", "0,1,2,3,4,0"},
           {"sweep", "--scenario", "inconclusive", "--eta-grid", "0:1:11"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("usage errors and help", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bound", "--no-such-flag"}).code == 2);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("construct") != std::string::npos);
}

TEST_CASE("FGU_SEED sets the default seed", "[cli]") {
  ::setenv("FGU_SEED", "1234", 1);
  CHECK(fgu::cli::default_seed() == 1234);
  ::setenv("FGU_SEED", "abc", 1);
  CHECK(run({"verify", "--suite", "discrimination"}).code == 2);
  ::unsetenv("FGU_SEED");
  CHECK(fgu::cli::default_seed() == 1);
}
