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


#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbeam/channel/monte_carlo.hpp"
#include "mbeam/frames/registry.hpp"
#include "mbeam/harness/table.hpp"

namespace mbeam {

inline constexpr std::int64_t kDefaultSlots = 20000;
inline constexpr std::uint64_t kDefaultSeed = 42;

// ---------------------------------------------------------------------------
// Correlation table
// ---------------------------------------------------------------------------

struct Table1Row {
  int n_t = 0;
  int n_beams = 0;
  double delta_first_rows = 0.0;  // Fourier frame on rows 1..n_t
  std::vector<int> selected_rows;
  double delta_fourier = 0.0;     // best row subset
  std::optional<double> delta_grassmannian;
  std::optional<double> delta_mub;
  double welch_bound = 0.0;
  double delta_hat_sq = 0.0;      // of the best available construction
};

/// Rows (2,4), (3,7), (3,9), (4,13), (4,16).
std::vector<Table1Row> table1_rows();
Table run_table1();

// ---------------------------------------------------------------------------
// Kullback-Leibler curve
// ---------------------------------------------------------------------------

struct KlCurveParams {
  std::vector<double> m_values{0.5, 3.0};
  std::vector<int> k_values{8, 16, 23, 24, 32, 64, 128, 256, 512, 1024, 2048};
  double snr_db = 0.0;
  int n_beams = 7;
  double delta_hat_sq = 4.0 / 3.0;
};

Table run_kl_curve(const KlCurveParams& params);

// ---------------------------------------------------------------------------
// Throughput curves
// ---------------------------------------------------------------------------

struct ThroughputCurveParams {
  std::vector<FrameSpec> constructions;  // empty: the five tabulated frames
  std::vector<int> k_values{16, 32, 64, 128, 256};
  double m = 0.5;
  std::vector<double> snr_db_values{0.0};
  std::int64_t slots = kDefaultSlots;
  std::uint64_t seed = kDefaultSeed;
  SinrModelKind sinr_model = SinrModelKind::kExact;
};

/// The preferred construction for each tabulated (n_t, N).
std::vector<FrameSpec> default_curve_constructions();

Table run_throughput_curve(const ThroughputCurveParams& params, const RunOptions& options = {});

struct CompareParams {
  int n_t = 4;
  double m = 0.5;
  double snr_db = 5.0;
  std::vector<int> k_values{16, 32, 64, 128};
  std::int64_t slots = kDefaultSlots;
  std::uint64_t seed = kDefaultSeed;
};

/// Largest Grassmannian frame for n_t against the N = n_t orthogonal baseline.
Table run_compare_orthogonal(const CompareParams& params, const RunOptions& options = {});

// ---------------------------------------------------------------------------
// Frames report and single simulations
// ---------------------------------------------------------------------------

struct FramesReportParams {
  std::vector<FrameSpec> constructions;  // empty: every supported (kind, n_t)
};

std::vector<FrameSpec> default_report_constructions();
Table run_frames_report(const FramesReportParams& params);

Table run_simulate(const SimulationConfig& config, const RunOptions& options = {});

// ---------------------------------------------------------------------------
// Experiment specs
// ---------------------------------------------------------------------------

enum class OutputFormat { kCsv, kJson };

/// A fully resolved experiment: kind, typed parameters with every default
/// filled, and the output destination.
struct ExperimentSpec {
  std::string kind;  // table1 | kl_curve | throughput_curve | compare_orthogonal | frames_report | simulate
  KlCurveParams kl;
  ThroughputCurveParams throughput;
  CompareParams compare;
  FramesReportParams frames;
  SimulationConfig simulate;
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::kCsv;
};

const std::vector<std::string>& experiment_kinds();

/// Parses {"kind", "parameters", "output": {"path", "format"}}, rejecting
/// unknown fields and out-of-range values with InvalidArgument.
ExperimentSpec parse_experiment_spec(const nlohmann::json& j);

/// The resolved spec, as echoed in every output header.
nlohmann::json resolved_spec_json(const ExperimentSpec& spec);

Table run_experiment(const ExperimentSpec& spec, const RunOptions& options = {});

/// CSV or JSON text of a finished experiment.
std::string render(const ExperimentSpec& spec, const Table& table);

/// Renders and writes to spec.output_path, or to `fallback` when the path is empty.
void emit(const ExperimentSpec& spec, const Table& table, std::ostream& fallback);

void to_json(nlohmann::json& j, const KlCurveParams& p);
void from_json(const nlohmann::json& j, KlCurveParams& p);
void to_json(nlohmann::json& j, const ThroughputCurveParams& p);
void from_json(const nlohmann::json& j, ThroughputCurveParams& p);
void to_json(nlohmann::json& j, const CompareParams& p);
void from_json(const nlohmann::json& j, CompareParams& p);
void to_json(nlohmann::json& j, const FramesReportParams& p);
void from_json(const nlohmann::json& j, FramesReportParams& p);

}  // namespace mbeam
