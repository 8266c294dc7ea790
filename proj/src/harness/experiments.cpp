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


#include "mbeam/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "mbeam/error.hpp"
#include "mbeam/evt/kl_divergence.hpp"
#include "mbeam/evt/throughput_bounds.hpp"
#include "mbeam/frames/constructions.hpp"
#include "mbeam/frames/correlation.hpp"

namespace mbeam {
namespace {

constexpr int kMaxUsers = 4096;

void check_keys(const nlohmann::json& j, const std::set<std::string>& known, const std::string& context) {
  require(j.is_object(), context + " must be a JSON object");
  for (const auto& item : j.items())
    require(known.count(item.key()) != 0, context + ": unknown field '" + item.key() + "'");
}

template <typename T>
T field(const nlohmann::json& j, const char* key, const T& fallback, const std::string& context) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(context + "." + key + ": " + e.what());
  }
}

void require_users(const std::vector<int>& ks, int lowest, const std::string& context) {
  require(!ks.empty(), context + ": K list is empty");
  for (int k : ks)
    require(k >= lowest && k <= kMaxUsers, context + ": K = " + std::to_string(k) + " outside [" +
                                               std::to_string(lowest) + ", " + std::to_string(kMaxUsers) + "]");
}

void require_positive(double v, const std::string& what) {
  require(v > 0.0 && std::isfinite(v), what + " must be positive and finite");
}

void require_finite(double v, const std::string& what) { require(std::isfinite(v), what + " must be finite"); }

std::optional<double> uniform_delta_hat_sq(const BeamformingMatrix& frame) {
  if (frame.construction().kind == ConstructionKind::kOrthonormalRandom) return 0.0;
  return correlation_profile(frame).delta_hat_sq;
}

Cell optional_correlation(const std::optional<double>& v) { return v ? Cell::correlation(*v) : Cell::empty(); }

KlCurveParams validated(const KlCurveParams& p) {
  require(!p.m_values.empty(), "kl_curve: m list is empty");
  for (double m : p.m_values) require_positive(m, "kl_curve: m");
  require_users(p.k_values, 2, "kl_curve");
  require_finite(p.snr_db, "kl_curve: snr_db");
  require(p.n_beams >= 1, "kl_curve: n_beams must be >= 1");
  require(p.delta_hat_sq >= 0.0 && std::isfinite(p.delta_hat_sq), "kl_curve: delta_hat_sq must be >= 0");
  return p;
}

ThroughputCurveParams validated(const ThroughputCurveParams& p) {
  ThroughputCurveParams out = p;
  if (out.constructions.empty()) out.constructions = default_curve_constructions();
  for (auto& c : out.constructions) c = resolve(c);
  require_users(out.k_values, 1, "throughput_curve");
  require_positive(out.m, "throughput_curve: m");
  require(!out.snr_db_values.empty(), "throughput_curve: snr list is empty");
  for (double s : out.snr_db_values) require_finite(s, "throughput_curve: snr_db");
  require(out.slots >= 1, "throughput_curve: slots must be >= 1");
  return out;
}

CompareParams validated(const CompareParams& p) {
  require(p.n_t >= 2 && p.n_t <= 4, "compare_orthogonal: n_t must be 2, 3 or 4");
  require_positive(p.m, "compare_orthogonal: m");
  require_finite(p.snr_db, "compare_orthogonal: snr_db");
  require_users(p.k_values, 1, "compare_orthogonal");
  require(p.slots >= 1, "compare_orthogonal: slots must be >= 1");
  return p;
}

FramesReportParams validated(const FramesReportParams& p) {
  FramesReportParams out = p;
  if (out.constructions.empty()) out.constructions = default_report_constructions();
  for (auto& c : out.constructions) c = resolve(c);
  return out;
}

SimulationConfig config_for(const FrameSpec& frame, int users, double m, double snr_db, std::int64_t slots,
                            std::uint64_t seed, SinrModelKind model = SinrModelKind::kExact) {
  SimulationConfig c;
  c.frame = frame;
  c.users = users;
  c.m = m;
  c.snr_db = snr_db;
  c.slots = slots;
  c.seed = seed;
  c.sinr_model = model;
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Table1Row> table1_rows() {
  const std::vector<std::pair<int, int>> configs{{2, 4}, {3, 7}, {3, 9}, {4, 13}, {4, 16}};
  std::vector<Table1Row> rows;
  for (const auto& [nt, n] : configs) {
    Table1Row r;
    r.n_t = nt;
    r.n_beams = n;
    std::vector<int> first(static_cast<std::size_t>(nt));
    for (int i = 0; i < nt; ++i) first[static_cast<std::size_t>(i)] = i + 1;
    r.delta_first_rows = correlation_profile(fourier_frame(nt, first, n)).delta_max;
    const RowSearchResult best = optimal_row_search(nt, n);
    r.selected_rows = best.selected_rows;
    const auto fourier_profile = correlation_profile(fourier_frame(nt, best.selected_rows, n));
    r.delta_fourier = fourier_profile.delta_max;
    r.welch_bound = welch_lower_bound(nt, n);
    r.delta_hat_sq = fourier_profile.delta_hat_sq.value_or(0.0);

    if (n == max_beam_grassmannian(nt).n_beams) {
      const auto g = correlation_profile(build_frame(FrameSpec{"grassmannian", nt, n, {}, {}}));
      r.delta_grassmannian = g.delta_max;
      r.delta_hat_sq = require_delta_hat_sq(g);
    }
    if (n == nt * nt && (nt == 2 || nt == 4)) {
      const auto mub = correlation_profile(mub_frame(nt));
      r.delta_mub = mub.delta_max;
      if (!r.delta_grassmannian && mub.delta_max < r.delta_fourier) r.delta_hat_sq = require_delta_hat_sq(mub);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

Table run_table1() {
  Table t;
  t.columns = {"n_t",           "n",           "delta_0",   "selected_rows", "delta_fourier",
               "delta_grassmannian", "delta_mub", "welch_bound", "delta_hat_sq"};
  for (const auto& r : table1_rows())
    t.add_row({Cell::integer(r.n_t), Cell::integer(r.n_beams), Cell::correlation(r.delta_first_rows),
               Cell::index_set(r.selected_rows), Cell::correlation(r.delta_fourier),
               optional_correlation(r.delta_grassmannian), optional_correlation(r.delta_mub),
               Cell::correlation(r.welch_bound), Cell::correlation(r.delta_hat_sq)});
  return t;
}

Table run_kl_curve(const KlCurveParams& raw) {
  const KlCurveParams p = validated(raw);
  Table t;
  t.columns = {"m", "K", "kl_bits", "status"};
  for (double m : p.m_values) {
    const SinrModel model{m, p.n_beams, db_to_linear(p.snr_db), p.delta_hat_sq};
    for (int k : p.k_values) {
      try {
        t.add_row({Cell::throughput(m), Cell::integer(k), Cell::throughput(kl_divergence(model, k).divergence_bits),
                   Cell::text("ok")});
      } catch (const ConvergenceError& e) {
        ++t.failed_rows;
        t.add_row({Cell::throughput(m), Cell::integer(k), Cell::empty(), Cell::text(e.what())});
      }
    }
  }
  return t;
}

std::vector<FrameSpec> default_curve_constructions() {
  return {resolve({"grassmannian", 2, 0, {}, {}}), resolve({"grassmannian", 3, 0, {}, {}}),
          resolve({"fourier-opt", 3, 9, {}, {}}), resolve({"grassmannian", 4, 0, {}, {}}),
          resolve({"mub", 4, 0, {}, {}})};
}

Table run_throughput_curve(const ThroughputCurveParams& raw, const RunOptions& options) {
  const ThroughputCurveParams p = validated(raw);
  Table t;
  t.columns = {"construction", "n_t",          "n",         "K",         "m",           "snr_db",
               "slots",        "seed",         "sim_mean",  "sim_stderr", "sim_ci_lo", "sim_ci_hi",
               "occupancy",    "delta_hat_sq", "upper_numeric", "lower_numeric", "closed_form", "status"};
  for (const auto& frame_spec : p.constructions) {
    const auto dhs = uniform_delta_hat_sq(build_frame(frame_spec));
    for (double snr : p.snr_db_values)
      for (int k : p.k_values) {
        const SimulationConfig c = config_for(frame_spec, k, p.m, snr, p.slots, p.seed, p.sinr_model);
        const ThroughputReport r = monte_carlo(c, options);
        std::vector<Cell> row{Cell::text(frame_spec.kind), Cell::integer(frame_spec.n_t),
                              Cell::integer(frame_spec.n_beams), Cell::integer(k), Cell::throughput(p.m),
                              Cell::throughput(snr), Cell::integer(p.slots), Cell::integer(static_cast<std::int64_t>(p.seed)),
                              Cell::throughput(r.mean), Cell::throughput(r.std_error), Cell::throughput(r.ci_low),
                              Cell::throughput(r.ci_high), Cell::throughput(r.mean_occupancy)};
        row.push_back(optional_correlation(dhs));
        std::string status = "ok";
        std::vector<Cell> analytic(3, Cell::empty());
        if (dhs && k >= 2) {
          const SinrModel model{p.m, frame_spec.n_beams, db_to_linear(snr), *dhs};
          try {
            analytic[0] = Cell::throughput(throughput_upper_numeric(model, k));
            if (k >= frame_spec.n_beams + 1) analytic[1] = Cell::throughput(throughput_lower_numeric(model, k));
            analytic[2] = Cell::throughput(throughput_closed_form(model, k));
          } catch (const ConvergenceError& e) {
            ++t.failed_rows;
            status = e.what();
          }
        }
        for (auto& a : analytic) row.push_back(std::move(a));
        row.push_back(Cell::text(status));
        t.add_row(std::move(row));
      }
  }
  return t;
}

Table run_compare_orthogonal(const CompareParams& raw, const RunOptions& options) {
  const CompareParams p = validated(raw);
  const FrameSpec proposed = max_beam_grassmannian(p.n_t);
  const FrameSpec baseline = resolve({"orthonormal", p.n_t, 0, {}, {}});
  const double dhs = require_delta_hat_sq(correlation_profile(build_frame(proposed)));
  Table t;
  t.columns = {"n_t",           "K",            "m",              "snr_db",          "slots",
               "seed",          "proposed_n",   "proposed_mean",  "proposed_ci_lo",  "proposed_ci_hi",
               "proposed_closed_form", "baseline_mean", "baseline_ci_lo", "baseline_ci_hi"};
  for (int k : p.k_values) {
    const auto pr = monte_carlo(config_for(proposed, k, p.m, p.snr_db, p.slots, p.seed), options);
    const auto br = monte_carlo(config_for(baseline, k, p.m, p.snr_db, p.slots, p.seed), options);
    const SinrModel model{p.m, proposed.n_beams, db_to_linear(p.snr_db), dhs};
    t.add_row({Cell::integer(p.n_t), Cell::integer(k), Cell::throughput(p.m), Cell::throughput(p.snr_db),
               Cell::integer(p.slots), Cell::integer(static_cast<std::int64_t>(p.seed)),
               Cell::integer(proposed.n_beams), Cell::throughput(pr.mean), Cell::throughput(pr.ci_low),
               Cell::throughput(pr.ci_high),
               k >= 2 ? Cell::throughput(throughput_closed_form(model, k)) : Cell::empty(),
               Cell::throughput(br.mean), Cell::throughput(br.ci_low), Cell::throughput(br.ci_high)});
  }
  return t;
}

std::vector<FrameSpec> default_report_constructions() {
  std::vector<FrameSpec> out;
  for (int nt = 2; nt <= 4; ++nt) out.push_back(resolve({"fourier", nt, 0, {}, {}}));
  out.push_back(resolve({"fourier-opt", 2, 4, {}, {}}));
  out.push_back(resolve({"fourier-opt", 3, 7, {}, {}}));
  out.push_back(resolve({"fourier-opt", 3, 9, {}, {}}));
  out.push_back(resolve({"fourier-opt", 4, 13, {}, {}}));
  out.push_back(resolve({"fourier-opt", 4, 16, {}, {}}));
  for (int nt = 2; nt <= 4; ++nt) out.push_back(resolve({"grassmannian", nt, 0, {}, {}}));
  for (int nt = 3; nt <= 4; ++nt) out.push_back(resolve({"harmonic", nt, 0, {}, {}}));
  out.push_back(resolve({"mub", 2, 0, {}, {}}));
  out.push_back(resolve({"mub", 4, 0, {}, {}}));
  for (int nt = 2; nt <= 4; ++nt) out.push_back(resolve({"orthonormal", nt, 0, {}, {}}));
  return out;
}

Table run_frames_report(const FramesReportParams& raw) {
  const FramesReportParams p = validated(raw);
  Table t;
  t.columns = {"construction", "label", "n_t", "n", "delta_max", "welch_bound", "delta_hat_sq"};
  for (const auto& spec : p.constructions) {
    const BeamformingMatrix frame = build_frame(spec);
    const auto profile = correlation_profile(frame);
    t.add_row({Cell::text(spec.kind), Cell::text(frame.construction().label()), Cell::integer(frame.n_t()),
               Cell::integer(frame.n_beams()), Cell::correlation(profile.delta_max),
               Cell::correlation(welch_lower_bound(frame.n_t(), frame.n_beams())),
               optional_correlation(profile.delta_hat_sq)});
  }
  return t;
}

Table run_simulate(const SimulationConfig& raw, const RunOptions& options) {
  const SimulationConfig c = validated(raw);
  const ThroughputReport r = monte_carlo(c, options);
  Table t;
  std::stringstream header(report_csv_header());
  for (std::string col; std::getline(header, col, ',');) t.columns.push_back(col);
  t.add_row({Cell::text(c.frame.kind), Cell::integer(c.frame.n_t), Cell::integer(c.frame.n_beams),
             Cell::integer(c.users), Cell::throughput(c.m), Cell::throughput(c.snr_db), Cell::integer(c.slots),
             Cell::integer(static_cast<std::int64_t>(c.seed)), Cell::throughput(r.mean),
             Cell::throughput(r.std_error), Cell::throughput(r.ci_low), Cell::throughput(r.ci_high),
             Cell::throughput(r.mean_occupancy)});
  return t;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds{"table1",        "kl_curve",      "throughput_curve",
                                              "compare_orthogonal", "frames_report", "simulate"};
  return kinds;
}

void to_json(nlohmann::json& j, const KlCurveParams& p) {
  j = {{"m", p.m_values}, {"k", p.k_values}, {"snr_db", p.snr_db}, {"n_beams", p.n_beams},
       {"delta_hat_sq", p.delta_hat_sq}};
}

void from_json(const nlohmann::json& j, KlCurveParams& p) {
  const std::string ctx = "kl_curve";
  check_keys(j, {"m", "k", "snr_db", "n_beams", "delta_hat_sq"}, ctx);
  const KlCurveParams d;
  p.m_values = field(j, "m", d.m_values, ctx);
  p.k_values = field(j, "k", d.k_values, ctx);
  p.snr_db = field(j, "snr_db", d.snr_db, ctx);
  p.n_beams = field(j, "n_beams", d.n_beams, ctx);
  p.delta_hat_sq = field(j, "delta_hat_sq", d.delta_hat_sq, ctx);
}

void to_json(nlohmann::json& j, const ThroughputCurveParams& p) {
  j = {{"constructions", p.constructions}, {"k", p.k_values}, {"m", p.m},
       {"snr_db", p.snr_db_values},        {"slots", p.slots}, {"seed", p.seed},
       {"sinr_model", to_string(p.sinr_model)}};
}

void from_json(const nlohmann::json& j, ThroughputCurveParams& p) {
  const std::string ctx = "throughput_curve";
  check_keys(j, {"constructions", "k", "m", "snr_db", "slots", "seed", "sinr_model"}, ctx);
  const ThroughputCurveParams d;
  p.constructions = field(j, "constructions", d.constructions, ctx);
  p.k_values = field(j, "k", d.k_values, ctx);
  p.m = field(j, "m", d.m, ctx);
  p.snr_db_values = field(j, "snr_db", d.snr_db_values, ctx);
  p.slots = field(j, "slots", d.slots, ctx);
  p.seed = field(j, "seed", d.seed, ctx);
  p.sinr_model = parse_sinr_model(field(j, "sinr_model", to_string(d.sinr_model), ctx));
}

void to_json(nlohmann::json& j, const CompareParams& p) {
  j = {{"n_t", p.n_t}, {"m", p.m}, {"snr_db", p.snr_db}, {"k", p.k_values}, {"slots", p.slots}, {"seed", p.seed}};
}

void from_json(const nlohmann::json& j, CompareParams& p) {
  const std::string ctx = "compare_orthogonal";
  check_keys(j, {"n_t", "m", "snr_db", "k", "slots", "seed"}, ctx);
  const CompareParams d;
  p.n_t = field(j, "n_t", d.n_t, ctx);
  p.m = field(j, "m", d.m, ctx);
  p.snr_db = field(j, "snr_db", d.snr_db, ctx);
  p.k_values = field(j, "k", d.k_values, ctx);
  p.slots = field(j, "slots", d.slots, ctx);
  p.seed = field(j, "seed", d.seed, ctx);
}

void to_json(nlohmann::json& j, const FramesReportParams& p) { j = {{"constructions", p.constructions}}; }

void from_json(const nlohmann::json& j, FramesReportParams& p) {
  check_keys(j, {"constructions"}, "frames_report");
  p.constructions = field(j, "constructions", std::vector<FrameSpec>{}, "frames_report");
}

ExperimentSpec parse_experiment_spec(const nlohmann::json& j) {
  check_keys(j, {"kind", "parameters", "output"}, "experiment spec");
  ExperimentSpec s;
  s.kind = field(j, "kind", std::string(), "experiment spec");
  const auto& kinds = experiment_kinds();
  require(std::find(kinds.begin(), kinds.end(), s.kind) != kinds.end(),
          "experiment spec: unknown kind '" + s.kind + "'");
  const nlohmann::json params = j.contains("parameters") ? j.at("parameters") : nlohmann::json::object();
  require(params.is_object(), "experiment spec: parameters must be an object");
  if (s.kind == "table1") {
    require(params.empty(), "table1 takes no parameters");
  } else if (s.kind == "kl_curve") {
    s.kl = validated(params.get<KlCurveParams>());
  } else if (s.kind == "throughput_curve") {
    s.throughput = validated(params.get<ThroughputCurveParams>());
  } else if (s.kind == "compare_orthogonal") {
    s.compare = validated(params.get<CompareParams>());
  } else if (s.kind == "frames_report") {
    s.frames = validated(params.get<FramesReportParams>());
  } else {
    s.simulate = validated(params.get<SimulationConfig>());
  }
  if (j.contains("output")) {
    const auto& out = j.at("output");
    check_keys(out, {"path", "format"}, "experiment spec output");
    s.output_path = field(out, "path", std::string(), "output");
    const auto format = field(out, "format", std::string("csv"), "output");
    require(format == "csv" || format == "json", "output format must be 'csv' or 'json'");
    s.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  }
  return s;
}

nlohmann::json resolved_spec_json(const ExperimentSpec& s) {
  nlohmann::json params = nlohmann::json::object();
  if (s.kind == "kl_curve") params = s.kl;
  else if (s.kind == "throughput_curve") params = s.throughput;
  else if (s.kind == "compare_orthogonal") params = s.compare;
  else if (s.kind == "frames_report") params = s.frames;
  else if (s.kind == "simulate") params = s.simulate;
  return {{"kind", s.kind},
          {"parameters", params},
          {"output", {{"path", s.output_path}, {"format", s.format == OutputFormat::kCsv ? "csv" : "json"}}}};
}

Table run_experiment(const ExperimentSpec& s, const RunOptions& options) {
  if (s.kind == "table1") return run_table1();
  if (s.kind == "kl_curve") return run_kl_curve(s.kl);
  if (s.kind == "throughput_curve") return run_throughput_curve(s.throughput, options);
  if (s.kind == "compare_orthogonal") return run_compare_orthogonal(s.compare, options);
  if (s.kind == "frames_report") return run_frames_report(s.frames);
  if (s.kind == "simulate") return run_simulate(s.simulate, options);
  throw InvalidArgument("unknown experiment kind '" + s.kind + "'");
}

std::string render(const ExperimentSpec& s, const Table& table) {
  const nlohmann::json spec = resolved_spec_json(s);
  if (s.format == OutputFormat::kJson) return table_to_json(table, spec).dump(2) + "\n";
  std::ostringstream out;
  write_csv(out, table, spec);
  return out.str();
}

void emit(const ExperimentSpec& s, const Table& table, std::ostream& fallback) {
  const std::string text = render(s, table);
  if (s.output_path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(s.output_path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write output file '" + s.output_path + "'");
  out << text;
}

}  // namespace mbeam
