// Copyright 2026 The purify Authors
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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "purify/cli.hpp"
#include "purify/report.hpp"

namespace purify::cli {
namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "purify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Digits of the mantissa after dropping sign, exponent and leading zeros.
int significant_digits(std::string text) {
  if (const auto e = text.find('e'); e != std::string::npos) text.resize(e);
  std::string digits;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') digits += ch;
  }
  const auto first = digits.find_first_not_of('0');
  if (first == std::string::npos) return static_cast<int>(digits.size());
  return static_cast<int>(digits.size() - first);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

TEST_CASE("run emits the exact tree as JSON") {
  const auto r = invoke({"run", "--beta2", "0.2"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.contains("pairs"));
  CHECK(doc["mode"] == "exact");
  CHECK(doc["totals"]["total_success_probability"].get<double>() == 0.4);
  const auto& branches = doc["branches"];
  REQUIRE(branches.size() == 4);
  const std::vector<std::string> names = {"PhiPlus", "PhiMinus", "PsiPlus", "PsiMinus"};
  const std::vector<double> success = {0.04, 0.04, 0.16, 0.16};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(branches[k]["outcome"] == names[k]);
    CHECK(branches[k]["joint_success_probability"].get<double>() == success[k]);
  }
  CHECK(branches[2]["plan"].is_null());
  CHECK(branches[0]["plan"]["attenuate_bit"] == 0);
}

TEST_CASE("run reports the Psi case for unequal pairs") {
  const auto r = invoke({"run", "--beta2", "0.2", "--b2", "0.3"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["psi_case"] == "Case1");
  CHECK(doc["totals"]["total_success_probability"].get<double>() == 0.4);
}

TEST_CASE("run rejects out-of-range weights") {
  const auto r = invoke({"run", "--beta2", "0.6"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("(0, 0.5]") != std::string::npos);
  CHECK(lines(r.err).size() == 1);
  CHECK(invoke({"run", "--beta2", "0"}).code == kExitUsage);
  CHECK(invoke({"run", "--beta2", "0.2", "--b2", "0.51"}).code == kExitUsage);
  CHECK(invoke({"run", "--beta2", "0.2", "--mode", "sample", "--trials", "0"}).code == kExitUsage);
  CHECK(invoke({"run", "--beta2", "0.2", "--mode", "magic"}).code == kExitUsage);
  CHECK(invoke({"run"}).code == kExitUsage);
  CHECK(invoke({"bogus"}).code == kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
}

TEST_CASE("run in sample mode carries the tally and is deterministic") {
  const std::vector<std::string> args = {"run", "--beta2", "0.2", "--mode", "sample",
                                         "--trials", "1000", "--seed", "7"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["tally"]["trials"] == 1000);
  CHECK(doc["tally"]["seed"] == 7);
  CHECK(doc["tally"]["generator"] == "std::mt19937_64");
  std::uint64_t total = 0;
  for (const auto& [name, cell] : doc["tally"]["counts"].items()) {
    total += cell["success"].get<std::uint64_t>() + cell["failure"].get<std::uint64_t>();
  }
  CHECK(total == 1000);
}

TEST_CASE("run CSV and output file") {
  const std::string path = "purify_cli_test_run.csv";
  const auto r = invoke({"run", "--beta2", "0.2", "--format", "csv", "--output", path});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto rows = lines(ss.str());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] ==
        "outcome,branch_probability,filter_applied,joint_success_probability,"
        "joint_failure_probability");
  CHECK(rows[1] == "PhiPlus,0.3400000000,1,0.04000000000,0.3000000000");
  CHECK(rows[3] == "PsiPlus,0.1600000000,0,0.1600000000,0.000000000");
  std::remove(path.c_str());

  CHECK(invoke({"run", "--beta2", "0.2", "--output", "/nonexistent-dir/x.json"}).code ==
        kExitUsage);
}

TEST_CASE("sweep emits the specified header and one row per grid point") {
  const auto r = invoke({"sweep", "--beta2", "0.1:0.5:0.2", "--b2", "0.2"});
  REQUIRE(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] ==
        "beta2,b2,p_phi_plus,p_phi_minus,p_psi_plus,p_psi_minus,p_success_total,"
        "p_success_predicted,abs_err");
  const std::vector<double> beta2 = {0.1, 0.3, 0.5};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    REQUIRE(cells.size() == 9);
    for (const auto& c : cells) {
      INFO(c);
      CHECK(significant_digits(c) == 10);
      CHECK(c.find('.') != std::string::npos);
    }
    CHECK(std::stod(cells[0]) == doctest::Approx(beta2[i - 1]));
    CHECK(std::stod(cells[1]) == doctest::Approx(0.2));
    CHECK(std::stod(cells[8]) <= 1e-10);
  }
  CHECK(rows[2] ==
        "0.3000000000,0.2000000000,0.06000000000,0.06000000000,0.1400000000,0.1400000000,"
        "0.4000000000,0.4000000000," +
            split(rows[2])[8]);
}

TEST_CASE("single-point sweep matches run") {
  const auto sweep = invoke({"sweep", "--beta2", "0.2", "--b2", "0.2"});
  const auto run = invoke({"run", "--beta2", "0.2"});
  REQUIRE(sweep.code == kExitOk);
  const auto cells = split(lines(sweep.out).at(1));
  const auto doc = nlohmann::json::parse(run.out);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::stod(cells[2 + k]) ==
          doctest::Approx(doc["branches"][k]["joint_success_probability"].get<double>()));
  }
  CHECK(std::stod(cells[6]) ==
        doctest::Approx(doc["totals"]["total_success_probability"].get<double>()));
}

TEST_CASE("sweep without --b2 walks the diagonal; --trials adds a column") {
  const auto r = invoke({"sweep", "--beta2", "0.1:0.3:0.1", "--trials", "2000", "--seed", "3"});
  REQUIRE(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].ends_with(",abs_err,p_success_sampled"));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    REQUIRE(cells.size() == 10);
    CHECK(cells[0] == cells[1]);
  }
  CHECK(invoke({"sweep", "--beta2", "0.1:0.3:0.1", "--trials", "2000", "--seed", "3"}).out ==
        r.out);
}

TEST_CASE("sweep rejects malformed grids") {
  CHECK(invoke({"sweep", "--beta2", "0.4:0.1:0.1"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--beta2", "0.1:0.4:0"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--beta2", "0.1:0.4:-0.1"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--beta2", "0.1:0.4"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--beta2", "a:b:c"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--beta2", "0.1:0.7:0.1"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--beta2", "0:0.2:0.1"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--beta2", "0.1:0.2:0.1", "--b2", "0.3:0.2:0.1"}).code == kExitUsage);
}

TEST_CASE("grid expansion snaps the last point onto stop") {
  const auto values = expand_grid(parse_grid("0.02:0.5:0.02"), "beta2");
  REQUIRE(values.size() == 25);
  CHECK(values.back() == 0.5);
  CHECK(expand_grid(parse_grid("0.25"), "b2") == std::vector<double>{0.25});
}

TEST_CASE("verify passes and is deterministic") {
  const auto a = invoke({"verify", "--trials", "1000", "--seed", "7"});
  const auto b = invoke({"verify", "--trials", "1000", "--seed", "7"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  for (const auto& line : lines(a.out)) CHECK(line.rfind("FAIL", 0) == std::string::npos);
  CHECK(a.out.find("verification passed") != std::string::npos);
  CHECK(invoke({"verify", "--trials", "0"}).code == kExitUsage);
}

TEST_CASE("number formatting is fixed at 10 significant digits") {
  CHECK(format_number(0.4) == "0.4000000000");
  CHECK(format_number(0.04) == "0.04000000000");
  CHECK(format_number(0.0) == "0.000000000");
  CHECK(format_number(-0.0) == "0.000000000");
  CHECK(format_number(5.551115123125783e-17) == "5.551115123e-17");
  CHECK(round_significant(0.39999999999999997) == 0.4);
}

}  // namespace
}  // namespace purify::cli
