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


// Command-line front end: experiments, frame export and verification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbeam/error.hpp"
#include "mbeam/frames/frame_io.hpp"
#include "mbeam/harness/experiments.hpp"
#include "mbeam/harness/verify.hpp"

namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInvalidSpec = 2, kNoConvergence = 3 };

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

long long to_integer(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  mbeam::require(used == s.size() && !s.empty(), what + ": '" + s + "' is not an integer");
  return v;
}

double to_real(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  mbeam::require(used == s.size() && !s.empty(), what + ": '" + s + "' is not a number");
  return v;
}

/// "a:b" (step 1), "a:b:step" or "a,b,c".
std::vector<int> parse_users(const std::string& text) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    mbeam::require(parts.size() == 2 || parts.size() == 3, "--k range must be a:b or a:b:step");
    const long long lo = to_integer(parts[0], "--k");
    const long long hi = to_integer(parts[1], "--k");
    const long long step = parts.size() == 3 ? to_integer(parts[2], "--k") : 1;
    mbeam::require(step >= 1 && lo <= hi, "--k range must be increasing with a positive step");
    mbeam::require(hi - lo <= 100000LL * step, "--k range is too long");
    for (long long k = lo; k <= hi; k += step) out.push_back(static_cast<int>(k));
    return out;
  }
  for (const auto& item : split(text, ',')) out.push_back(static_cast<int>(to_integer(item, "--k")));
  return out;
}

std::vector<double> parse_reals(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(to_real(item, what));
  return out;
}

/// "kind[:n_t[:N]]"; missing fields fall back to --nt / --n.
json parse_construction(const std::string& token, std::optional<int> nt, std::optional<int> n) {
  const auto parts = split(token, ':');
  mbeam::require(!parts.empty() && parts.size() <= 3, "construction must be kind[:n_t[:N]], got '" + token + "'");
  json c = {{"kind", parts[0]}};
  if (parts.size() >= 2) c["n_t"] = to_integer(parts[1], "construction n_t");
  else if (nt) c["n_t"] = *nt;
  if (parts.size() == 3) c["n_beams"] = to_integer(parts[2], "construction N");
  else if (n) c["n_beams"] = *n;
  return c;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mbeam::InvalidArgument("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw mbeam::InvalidArgument("'" + path + "': " + e.what());
  }
}

/// Options shared by every experiment subcommand.
struct Common {
  std::string config;
  std::string out;
  std::string format;
  int threads = 0;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "JSON experiment spec; flags override its fields");
    app->add_option("--out", out, "Output file (default: standard output)");
    app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--threads", threads, "Worker threads (0 = all cores); never changes results");
  }

  /// Config file (if any) with kind checked, plus output overrides.
  json base(const std::string& kind) const {
    json spec = config.empty() ? json{{"kind", kind}} : load_json_file(config);
    mbeam::require(spec.is_object(), "config file must hold a JSON object");
    if (!spec.contains("kind")) spec["kind"] = kind;
    mbeam::require(spec["kind"] == kind, "config file describes '" + spec["kind"].dump() + "', not '" + kind + "'");
    if (!spec.contains("parameters")) spec["parameters"] = json::object();
    if (!out.empty()) spec["output"]["path"] = out;
    if (!format.empty()) spec["output"]["format"] = format;
    return spec;
  }
};

int run_spec(const json& raw, int threads) {
  const mbeam::ExperimentSpec spec = mbeam::parse_experiment_spec(raw);
  const mbeam::Table table = mbeam::run_experiment(spec, mbeam::RunOptions{threads});
  mbeam::emit(spec, table, std::cout);
  if (table.failed_rows > 0) {
    std::cerr << "mbeam: " << table.failed_rows << " row(s) failed to converge\n";
    return kNoConvergence;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opportunistic beamforming with correlated beams: frames, extreme-value analysis and simulation"};
  app.set_version_flag("--version", mbeam::artifact_version());
  app.require_subcommand(1);

  std::function<int()> action;

  // frames ------------------------------------------------------------------
  auto* frames = app.add_subcommand("frames", "Inspect or export beamforming matrices");
  frames->require_subcommand(1);
  Common frames_common;
  std::vector<std::string> report_constructions;
  std::optional<int> report_nt;
  std::optional<int> report_n;
  auto* report = frames->add_subcommand("report", "Correlation summary of constructions");
  frames_common.attach(report);
  report->add_option("--construction", report_constructions, "kind[:n_t[:N]] (repeatable; default: all)");
  report->add_option("--nt", report_nt, "Default n_t for --construction");
  report->add_option("--n", report_n, "Default N for --construction");
  report->callback([&] {
    action = [&] {
      json spec = frames_common.base("frames_report");
      if (!report_constructions.empty()) {
        json list = json::array();
        for (const auto& c : report_constructions) list.push_back(parse_construction(c, report_nt, report_n));
        spec["parameters"]["constructions"] = list;
      }
      return run_spec(spec, frames_common.threads);
    };
  });

  std::string export_kind = "grassmannian";
  int export_nt = 3;
  int export_n = 0;
  std::string export_rows;
  std::string export_ds;
  std::string export_out;
  auto* exporter = frames->add_subcommand("export", "Write one frame as JSON");
  exporter->add_option("--construction", export_kind, "Registry name")->capture_default_str();
  exporter->add_option("--nt", export_nt, "Transmit antennas")->capture_default_str();
  exporter->add_option("--n", export_n, "Beams (0 = construction default)");
  exporter->add_option("--rows", export_rows, "Fourier rows, e.g. 3,7,9");
  exporter->add_option("--difference-set", export_ds, "Harmonic difference set, e.g. 0,1,3");
  exporter->add_option("--out", export_out, "Output file (default: standard output)");
  exporter->callback([&] {
    action = [&] {
      mbeam::FrameSpec s{export_kind, export_nt, export_n, {}, {}};
      for (const auto& r : split(export_rows, ',')) s.rows.push_back(static_cast<int>(to_integer(r, "--rows")));
      for (const auto& d : split(export_ds, ','))
        s.difference_set.push_back(static_cast<int>(to_integer(d, "--difference-set")));
      const auto frame = mbeam::build_frame(s);
      if (export_out.empty()) std::cout << mbeam::frame_to_json(frame).dump(2) << '\n';
      else mbeam::save_frame(frame, export_out);
      return static_cast<int>(kOk);
    };
  });

  // table1 ------------------------------------------------------------------
  Common table_common;
  auto* table1 = app.add_subcommand("table1", "Correlation comparison of the tabulated constructions");
  table_common.attach(table1);
  table1->callback([&] { action = [&] { return run_spec(table_common.base("table1"), table_common.threads); }; });

  // kl ----------------------------------------------------------------------
  Common kl_common;
  std::string kl_m;
  std::string kl_k;
  std::optional<double> kl_snr;
  std::optional<int> kl_n;
  std::optional<double> kl_dhs;
  auto* kl = app.add_subcommand("kl", "KL divergence of the Gumbel approximation versus K");
  kl_common.attach(kl);
  kl->add_option("--m", kl_m, "Fading parameters, e.g. 0.5,3");
  kl->add_option("--k", kl_k, "Users: a:b[:step] or a,b,c");
  kl->add_option("--snr", kl_snr, "SNR in dB");
  kl->add_option("--n", kl_n, "Beams N");
  kl->add_option("--delta-hat-sq", kl_dhs, "Interference constant");
  kl->callback([&] {
    action = [&] {
      json spec = kl_common.base("kl_curve");
      auto& p = spec["parameters"];
      if (!kl_m.empty()) p["m"] = parse_reals(kl_m, "--m");
      if (!kl_k.empty()) p["k"] = parse_users(kl_k);
      if (kl_snr) p["snr_db"] = *kl_snr;
      if (kl_n) p["n_beams"] = *kl_n;
      if (kl_dhs) p["delta_hat_sq"] = *kl_dhs;
      return run_spec(spec, kl_common.threads);
    };
  });

  // throughput ----------------------------------------------------------------
  Common tp_common;
  std::vector<std::string> tp_constructions;
  std::optional<int> tp_nt;
  std::optional<int> tp_n;
  std::string tp_k;
  std::optional<double> tp_m;
  std::string tp_snr;
  std::optional<std::int64_t> tp_slots;
  std::optional<std::uint64_t> tp_seed;
  std::string tp_model;
  auto* tp = app.add_subcommand("throughput", "Simulated throughput against the analytic bounds");
  tp_common.attach(tp);
  tp->add_option("--construction", tp_constructions, "kind[:n_t[:N]] (repeatable; default: the tabulated five)");
  tp->add_option("--nt", tp_nt, "Default n_t for --construction");
  tp->add_option("--n", tp_n, "Default N for --construction");
  tp->add_option("--k", tp_k, "Users: a:b[:step] or a,b,c");
  tp->add_option("--m", tp_m, "Fading parameter");
  tp->add_option("--snr", tp_snr, "SNR values in dB, e.g. 0,5");
  tp->add_option("--slots", tp_slots, "Monte Carlo slots");
  tp->add_option("--seed", tp_seed, "Master seed");
  tp->add_option("--sinr-model", tp_model, "exact or approximate")->check(CLI::IsMember({"exact", "approximate"}));
  tp->callback([&] {
    action = [&] {
      json spec = tp_common.base("throughput_curve");
      auto& p = spec["parameters"];
      if (!tp_constructions.empty()) {
        json list = json::array();
        for (const auto& c : tp_constructions) list.push_back(parse_construction(c, tp_nt, tp_n));
        p["constructions"] = list;
      }
      if (!tp_k.empty()) p["k"] = parse_users(tp_k);
      if (tp_m) p["m"] = *tp_m;
      if (!tp_snr.empty()) p["snr_db"] = parse_reals(tp_snr, "--snr");
      if (tp_slots) p["slots"] = *tp_slots;
      if (tp_seed) p["seed"] = *tp_seed;
      if (!tp_model.empty()) p["sinr_model"] = tp_model;
      return run_spec(spec, tp_common.threads);
    };
  });

  // compare -------------------------------------------------------------------
  Common cmp_common;
  std::optional<int> cmp_nt;
  std::optional<double> cmp_m;
  std::optional<double> cmp_snr;
  std::string cmp_k;
  std::optional<std::int64_t> cmp_slots;
  std::optional<std::uint64_t> cmp_seed;
  auto* cmp = app.add_subcommand("compare", "Largest Grassmannian frame versus the orthogonal baseline");
  cmp_common.attach(cmp);
  cmp->add_option("--nt", cmp_nt, "Transmit antennas (2, 3 or 4)");
  cmp->add_option("--m", cmp_m, "Fading parameter");
  cmp->add_option("--snr", cmp_snr, "SNR in dB");
  cmp->add_option("--k", cmp_k, "Users: a:b[:step] or a,b,c");
  cmp->add_option("--slots", cmp_slots, "Monte Carlo slots");
  cmp->add_option("--seed", cmp_seed, "Master seed");
  cmp->callback([&] {
    action = [&] {
      json spec = cmp_common.base("compare_orthogonal");
      auto& p = spec["parameters"];
      if (cmp_nt) p["n_t"] = *cmp_nt;
      if (cmp_m) p["m"] = *cmp_m;
      if (cmp_snr) p["snr_db"] = *cmp_snr;
      if (!cmp_k.empty()) p["k"] = parse_users(cmp_k);
      if (cmp_slots) p["slots"] = *cmp_slots;
      if (cmp_seed) p["seed"] = *cmp_seed;
      return run_spec(spec, cmp_common.threads);
    };
  });

  // simulate ------------------------------------------------------------------
  Common sim_common;
  std::optional<std::string> sim_kind;
  std::optional<int> sim_nt;
  std::optional<int> sim_n;
  std::optional<int> sim_users;
  std::optional<double> sim_m;
  std::optional<double> sim_snr;
  std::optional<std::int64_t> sim_slots;
  std::optional<std::uint64_t> sim_seed;
  std::string sim_model;
  auto* sim = app.add_subcommand("simulate", "One Monte Carlo experiment");
  sim_common.attach(sim);
  sim->add_option("--construction", sim_kind, "Registry name");
  sim->add_option("--nt", sim_nt, "Transmit antennas");
  sim->add_option("--n", sim_n, "Beams");
  sim->add_option("--users", sim_users, "Users K");
  sim->add_option("--m", sim_m, "Fading parameter");
  sim->add_option("--snr", sim_snr, "SNR in dB");
  sim->add_option("--slots", sim_slots, "Monte Carlo slots");
  sim->add_option("--seed", sim_seed, "Master seed");
  sim->add_option("--sinr-model", sim_model, "exact or approximate")->check(CLI::IsMember({"exact", "approximate"}));
  sim->callback([&] {
    action = [&] {
      json spec = sim_common.base("simulate");
      auto& p = spec["parameters"];
      if (sim_kind) p["construction"] = *sim_kind;
      if (sim_nt) p["n_t"] = *sim_nt;
      if (sim_n) p["n_beams"] = *sim_n;
      if (sim_users) p["users"] = *sim_users;
      if (sim_m) p["m"] = *sim_m;
      if (sim_snr) p["snr_db"] = *sim_snr;
      if (sim_slots) p["slots"] = *sim_slots;
      if (sim_seed) p["seed"] = *sim_seed;
      if (!sim_model.empty()) p["sinr_model"] = sim_model;
      return run_spec(spec, sim_common.threads);
    };
  });

  // run -----------------------------------------------------------------------
  std::string run_path;
  int run_threads = 0;
  auto* run = app.add_subcommand("run", "Execute an experiment spec file as is");
  run->add_option("--spec", run_path, "JSON experiment spec")->required();
  run->add_option("--threads", run_threads, "Worker threads");
  run->callback([&] { action = [&] { return run_spec(load_json_file(run_path), run_threads); }; });

  // verify --------------------------------------------------------------------
  std::vector<int> verify_criteria;
  bool verify_skip_invariants = false;
  std::string verify_json;
  mbeam::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite and acceptance criteria");
  verify->add_option("--criterion", verify_criteria, "Only these criteria (1..7); repeatable");
  verify->add_flag("--skip-invariants", verify_skip_invariants, "Skip the module invariant suite");
  verify->add_option("--json", verify_json, "Write the JSON verdict here ('-' for standard output)");
  verify->add_option("--seed", verify_options.seed, "Master seed")->capture_default_str();
  verify->add_option("--slots", verify_options.slots, "Monte Carlo slots")->capture_default_str();
  verify->add_option("--threads", verify_options.run.threads, "Worker threads");
  verify->callback([&] {
    action = [&] {
      std::vector<mbeam::CriterionResult> results;
      if (verify_criteria.empty()) {
        results = verify_skip_invariants ? std::vector<mbeam::CriterionResult>{} : std::vector{mbeam::run_invariant_suite(verify_options)};
        for (int i = 1; i <= mbeam::kCriterionCount; ++i) results.push_back(mbeam::run_criterion(i, verify_options));
      } else {
        if (!verify_skip_invariants) results.push_back(mbeam::run_invariant_suite(verify_options));
        for (int i : verify_criteria) results.push_back(mbeam::run_criterion(i, verify_options));
      }
      const json verdict = mbeam::verdict_json(results);
      if (verify_json == "-") {
        std::cout << verdict.dump(2) << '\n';
      } else {
        std::cout << mbeam::format_results(results);
        if (!verify_json.empty()) {
          std::ofstream out(verify_json);
          if (!out) throw mbeam::InvalidArgument("cannot write '" + verify_json + "'");
          out << verdict.dump(2) << '\n';
        }
      }
      return verdict["passed"].get<bool>() ? static_cast<int>(kOk) : static_cast<int>(kVerificationFailed);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidSpec;
  } catch (const mbeam::InvalidArgument& e) {
    std::cerr << "mbeam: invalid spec: " << e.what() << '\n';
    return kInvalidSpec;
  }

  try {
    return action();
  } catch (const mbeam::InvalidArgument& e) {
    std::cerr << "mbeam: invalid spec: " << e.what() << '\n';
    return kInvalidSpec;
  } catch (const mbeam::ConvergenceError& e) {
    std::cerr << "mbeam: numerical non-convergence: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "mbeam: " << e.what() << '\n';
    return kInvalidSpec;
  }
}
