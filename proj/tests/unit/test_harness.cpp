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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mbeam/error.hpp"
#include "mbeam/harness/experiments.hpp"
#include "mbeam/harness/table.hpp"
#include "mbeam/harness/verify.hpp"

using namespace mbeam;
using nlohmann::json;

namespace {

std::string cell(const Table& t, std::size_t row, const std::string& column) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == column) return t.rows.at(row).at(i).csv;
  throw std::runtime_error("no column " + column);
}

double number(const Table& t, std::size_t row, const std::string& column) { return std::stod(cell(t, row, column)); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

ExperimentSpec spec_from(const std::string& text) { return parse_experiment_spec(json::parse(text)); }

}  // namespace

TEST_SUITE("table") {
  TEST_CASE("cell formatting") {
    CHECK(Cell::throughput(3.9897812).csv == "3.98978");
    CHECK(Cell::throughput(12.0).csv == "12");
    CHECK(Cell::correlation(0.65651).csv == "0.6565");
    CHECK(Cell::correlation(0.5).csv == "0.5000");
    CHECK(Cell::index_set({3, 7, 9}).csv == "{3,7,9}");
    CHECK(Cell::index_set({3, 7, 9}).json == json({3, 7, 9}));
    CHECK(Cell::empty().csv.empty());
    CHECK(Cell::empty().json.is_null());
    CHECK(Cell::integer(64).json == 64);
  }

  TEST_CASE("CSV header block, escaping and row width") {
    Table t;
    t.columns = {"a", "b"};
    t.add_row({Cell::text("x,y"), Cell::integer(1)});
    t.add_row({Cell::text("say \"hi\""), Cell::empty()});
    CHECK_THROWS_AS(t.add_row({Cell::integer(1)}), InvalidArgument);
    std::ostringstream out;
    write_csv(out, t, json{{"kind", "demo"}});
    const auto l = lines(out.str());
    REQUIRE(l.size() == 5);
    CHECK(l[0] == "# mbeam " + artifact_version());
    CHECK(l[1] == "# spec: {\"kind\":\"demo\"}");
    CHECK(l[2] == "a,b");
    CHECK(l[3] == "\"x,y\",1");
    CHECK(l[4] == "\"say \"\"hi\"\"\",");
  }

  TEST_CASE("JSON document") {
    Table t;
    t.columns = {"K", "v"};
    t.add_row({Cell::integer(8), Cell::throughput(0.5)});
    const auto j = table_to_json(t, json{{"kind", "demo"}});
    CHECK(j.at("version") == artifact_version());
    CHECK(j.at("spec").at("kind") == "demo");
    CHECK(j.at("rows").at(0).at("K") == 8);
    CHECK(j.at("rows").at(0).at("v") == 0.5);
  }
}

TEST_SUITE("table1") {
  TEST_CASE("tabulated rows") {
    const Table t = run_table1();
    REQUIRE(t.rows.size() == 5);
    CHECK(cell(t, 0, "n_t") == "2");
    CHECK(cell(t, 0, "delta_grassmannian") == "0.5774");
    CHECK(cell(t, 0, "welch_bound") == "0.5774");
    CHECK(cell(t, 2, "n") == "9");
    CHECK(cell(t, 2, "delta_0") == "0.8440");
    CHECK(cell(t, 2, "selected_rows") == "{1,2,4}");
    CHECK(cell(t, 2, "delta_fourier") == "0.6565");
    CHECK(cell(t, 2, "welch_bound") == "0.5000");
    CHECK(cell(t, 2, "delta_grassmannian").empty());
    CHECK(cell(t, 2, "delta_mub").empty());
    CHECK(number(t, 2, "delta_hat_sq") == doctest::Approx(2.0));
    CHECK(cell(t, 4, "delta_mub") == "0.5000");
    CHECK(cell(t, 4, "welch_bound") == "0.4472");
    CHECK(number(t, 4, "delta_hat_sq") == doctest::Approx(3.0));
    CHECK(cell(t, 3, "delta_grassmannian") == "0.4330");
  }
}

TEST_SUITE("curves") {
  TEST_CASE("KL curve rows") {
    KlCurveParams p;
    p.k_values = {8};
    const Table t = run_kl_curve(p);
    REQUIRE(t.rows.size() == 2);
    CHECK(number(t, 0, "kl_bits") == doctest::Approx(0.14).epsilon(0.15));
    CHECK(number(t, 1, "kl_bits") == doctest::Approx(0.025).epsilon(0.4));
    CHECK(cell(t, 0, "status") == "ok");
  }

  TEST_CASE("throughput smoke run") {
    ThroughputCurveParams p;
    p.constructions = {FrameSpec{"grassmannian", 3, 0, {}, {}}};
    p.k_values = {16};
    p.slots = 10;
    const Table t = run_throughput_curve(p);
    REQUIRE(t.rows.size() == 1);
    CHECK(cell(t, 0, "construction") == "grassmannian");
    CHECK(cell(t, 0, "n") == "7");
    CHECK(number(t, 0, "sim_mean") > 0.0);
    CHECK(number(t, 0, "lower_numeric") <= number(t, 0, "upper_numeric"));
    CHECK(number(t, 0, "upper_numeric") <= number(t, 0, "closed_form") + 1e-5);
    CHECK(cell(t, 0, "status") == "ok");
  }

  TEST_CASE("default constructions cover the five tabulated frames") {
    ThroughputCurveParams p;
    p.k_values = {64};
    p.slots = 2;
    const Table t = run_throughput_curve(p);
    REQUIRE(t.rows.size() == 5);
    // N = 7 closed form exceeds N = 9 by about 0.19
    CHECK(number(t, 1, "closed_form") - number(t, 2, "closed_form") == doctest::Approx(0.19).epsilon(0.05));
  }

  TEST_CASE("users below N + 1 leave the lower bound empty") {
    ThroughputCurveParams p;
    p.constructions = {FrameSpec{"grassmannian", 3, 0, {}, {}}};
    p.k_values = {1, 7};
    p.slots = 3;
    const Table t = run_throughput_curve(p);
    CHECK(cell(t, 0, "lower_numeric").empty());
    CHECK(cell(t, 1, "lower_numeric").empty());
  }

  TEST_CASE("compare smoke run") {
    CompareParams p;
    p.k_values = {16};
    p.slots = 10;
    const Table t = run_compare_orthogonal(p);
    REQUIRE(t.rows.size() == 1);
    CHECK(cell(t, 0, "proposed_n") == "13");
    CHECK(number(t, 0, "baseline_mean") > 0.0);
  }

  TEST_CASE("frames report") {
    const Table t = run_frames_report({});
    CHECK(t.rows.size() == default_report_constructions().size());
    CHECK(cell(t, 0, "construction") == "fourier");
  }

  TEST_CASE("single simulation") {
    SimulationConfig c;
    c.frame = FrameSpec{"mub", 2, 0, {}, {}};
    c.users = 4;
    c.slots = 5;
    const Table t = run_simulate(c);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.columns.front() == "construction");
  }
}

TEST_SUITE("experiment_spec") {
  TEST_CASE("defaults are filled and echoed") {
    const auto s = spec_from(R"({"kind": "throughput_curve"})");
    const auto j = resolved_spec_json(s);
    CHECK(j.at("parameters").at("slots") == 20000);
    CHECK(j.at("parameters").at("seed") == 42);
    CHECK(j.at("parameters").at("constructions").size() == 5);
    CHECK(j.at("output").at("format") == "csv");
    CHECK(parse_experiment_spec(j).throughput.k_values == s.throughput.k_values);
  }

  TEST_CASE("every kind parses") {
    for (const auto& kind : experiment_kinds()) CHECK(spec_from("{\"kind\": \"" + kind + "\"}").kind == kind);
  }

  TEST_CASE("invalid specs are rejected before running") {
    const char* bad[] = {
        R"({"kind": "plot"})",
        R"({"parameters": {}})",
        R"({"kind": "table1", "extra": 1})",
        R"({"kind": "kl_curve", "parameters": {"k": [1]}})",
        R"({"kind": "kl_curve", "parameters": {"k": [5000]}})",
        R"({"kind": "kl_curve", "parameters": {"m": [0]}})",
        R"({"kind": "kl_curve", "parameters": {"mm": [1]}})",
        R"({"kind": "throughput_curve", "parameters": {"slots": 0}})",
        R"({"kind": "throughput_curve", "parameters": {"constructions": ["mub:3"]}})",
        R"({"kind": "throughput_curve", "parameters": {"constructions": [{"kind": "mub", "n_t": 3}]}})",
        R"({"kind": "compare_orthogonal", "parameters": {"n_t": 5}})",
        R"({"kind": "simulate", "parameters": {"users": 0}})",
        R"({"kind": "table1", "output": {"format": "xml"}})",
        R"({"kind": "table1", "output": {"where": "x"}})",
        R"({"kind": "kl_curve", "parameters": {"k": "eight"}})",
    };
    for (const char* text : bad) {
      CAPTURE(text);
      CHECK_THROWS_AS(spec_from(text), InvalidArgument);
    }
  }

  TEST_CASE("reruns render byte-identical output") {
    const auto s = spec_from(R"({"kind": "throughput_curve",
      "parameters": {"constructions": [{"kind": "grassmannian", "n_t": 3}], "k": [16, 32], "slots": 50}})");
    const std::string a = render(s, run_experiment(s, {1}));
    CHECK(a == render(s, run_experiment(s, {3})));
    const auto l = lines(a);
    CHECK(l[0].rfind("# mbeam ", 0) == 0);
    CHECK(l[1].rfind("# spec: ", 0) == 0);
    CHECK(json::parse(l[1].substr(8)) == resolved_spec_json(s));
    CHECK(l[2].rfind("construction,n_t,n,K", 0) == 0);
    CHECK(l.size() == 5);
  }

  TEST_CASE("JSON rendering and file output") {
    const auto path = std::filesystem::temp_directory_path() / "mbeam_harness_table1.json";
    std::filesystem::remove(path);
    auto s = spec_from(R"({"kind": "table1", "output": {"format": "json"}})");
    s.output_path = path.string();
    std::ostringstream unused;
    emit(s, run_experiment(s), unused);
    CHECK(unused.str().empty());
    std::ifstream in(path);
    const json doc = json::parse(in);
    CHECK(doc.at("rows").size() == 5);
    CHECK(doc.at("spec").at("kind") == "table1");
    std::filesystem::remove(path);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("closed-form criterion passes and reports checks") {
    const auto r = run_criterion(2);
    CHECK(r.number == 2);
    CHECK(r.passed());
    CHECK_FALSE(r.checks.empty());
    const auto text = format_results({r});
    CHECK(text.find("PASS") != std::string::npos);
    const auto verdict = verdict_json({r});
    CHECK(verdict.at("passed") == true);
  }

  TEST_CASE("unknown criteria are rejected") { CHECK_THROWS_AS(run_criterion(8), InvalidArgument); }
}
