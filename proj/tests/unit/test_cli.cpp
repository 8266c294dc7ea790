// Copyright 2026 The mbeam Authors
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


#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kScratch = fs::temp_directory_path() / "mbeam_cli_test";

int run(const std::string& args, const std::string& stdout_file = "") {
  const std::string redirect = stdout_file.empty() ? " >/dev/null" : " >" + (kScratch / stdout_file).string();
  const std::string cmd = std::string(MBEAM_CLI_PATH) + " " + args + redirect + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& name) {
  std::ifstream in(kScratch / name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& name, const std::string& text) { std::ofstream(kScratch / name) << text; }

std::string path(const std::string& name) { return (kScratch / name).string(); }

json spec_line(const std::string& csv) {
  std::istringstream in(csv);
  std::string l;
  std::getline(in, l);
  std::getline(in, l);
  REQUIRE(l.rfind("# spec: ", 0) == 0);
  return json::parse(l.substr(8));
}

struct Scratch {
  Scratch() { fs::create_directories(kScratch); }
  ~Scratch() { fs::remove_all(kScratch); }
};

}  // namespace

TEST_CASE_FIXTURE(Scratch, "success paths exit 0") {
  CHECK(run("--version") == 0);
  CHECK(run("table1 --out " + path("t1.csv")) == 0);
  const auto csv = slurp("t1.csv");
  CHECK(csv.rfind("# mbeam ", 0) == 0);
  CHECK(csv.find("n_t,n,delta_0,selected_rows") != std::string::npos);
  CHECK(run("frames report --construction grassmannian:3 --construction mub:4", "report.csv") == 0);
  CHECK(slurp("report.csv").find("mub") != std::string::npos);
  CHECK(run("frames export --construction harmonic --nt 3 --out " + path("h.json")) == 0);
  CHECK(json::parse(slurp("h.json")).contains("entries"));
}

TEST_CASE_FIXTURE(Scratch, "invalid input exits 2") {
  CHECK(run("") == 2);
  CHECK(run("plot") == 2);
  CHECK(run("kl --k 1") == 2);
  CHECK(run("kl --k 8:x") == 2);
  CHECK(run("frames export --construction mub --nt 3") == 2);
  CHECK(run("throughput --construction nope:3 --k 16 --slots 2") == 2);
  CHECK(run("table1 --format xml") == 2);
  CHECK(run("verify --criterion 9") == 2);
  CHECK(run("run --spec " + path("missing.json")) == 2);
  write("bad.json", R"({"kind": "kl_curve", "parameters": {"k": [8], "colour": 1}})");
  CHECK(run("run --spec " + path("bad.json")) == 2);
}

TEST_CASE_FIXTURE(Scratch, "verification outcome sets the exit status") {
  CHECK(run("verify --skip-invariants --criterion 2 --json " + path("v.json")) == 0);
  const auto verdict = json::parse(slurp("v.json"));
  CHECK(verdict.at("passed") == true);
  // a single slot cannot reproduce the simulated mean
  CHECK(run("verify --skip-invariants --criterion 3 --slots 1") == 1);
}

TEST_CASE_FIXTURE(Scratch, "flags override the config file") {
  write("cfg.json", R"({"kind": "throughput_curve",
    "parameters": {"constructions": [{"kind": "grassmannian", "n_t": 3}], "k": [16], "slots": 5, "seed": 9}})");
  CHECK(run("throughput --config " + path("cfg.json") + " --slots 7", "a.csv") == 0);
  const auto spec = spec_line(slurp("a.csv"));
  CHECK(spec.at("parameters").at("slots") == 7);
  CHECK(spec.at("parameters").at("seed") == 9);
  CHECK(spec.at("parameters").at("k") == json({16}));
  write("kl.json", R"({"kind": "table1"})");
  CHECK(run("kl --config " + path("kl.json")) == 2);
}

TEST_CASE_FIXTURE(Scratch, "K ranges and byte-identical reruns") {
  const std::string args = "throughput --construction grassmannian:3 --k 16:32:16 --slots 20 --seed 5";
  CHECK(run(args, "r1.csv") == 0);
  CHECK(run(args + " --threads 3", "r2.csv") == 0);
  CHECK(slurp("r1.csv") == slurp("r2.csv"));
  const auto spec = spec_line(slurp("r1.csv"));
  CHECK(spec.at("parameters").at("k") == json({16, 32}));
  write("spec.json", spec.dump());
  CHECK(run("run --spec " + path("spec.json"), "r3.csv") == 0);
  CHECK(slurp("r3.csv") == slurp("r1.csv"));
}

TEST_CASE_FIXTURE(Scratch, "JSON output format") {
  CHECK(run("kl --m 0.5 --k 8,16 --format json", "kl.json") == 0);
  const auto doc = json::parse(slurp("kl.json"));
  CHECK(doc.at("rows").size() == 2);
  CHECK(doc.at("spec").at("kind") == "kl_curve");
}
