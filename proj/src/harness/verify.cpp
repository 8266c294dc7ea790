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


#include "mbeam/harness/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "mbeam/error.hpp"
#include "mbeam/evt/kl_divergence.hpp"
#include "mbeam/evt/throughput_bounds.hpp"
#include "mbeam/frames/constructions.hpp"
#include "mbeam/frames/correlation.hpp"
#include "mbeam/frames/difference_set.hpp"
#include "mbeam/harness/experiments.hpp"
#include "mbeam/numerics/quadrature.hpp"
#include "mbeam/numerics/statistics.hpp"

namespace mbeam {
namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

SimulationConfig grassmannian_3x7(const VerifyOptions& o, std::uint64_t seed) {
  SimulationConfig c;
  c.frame = max_beam_grassmannian(3);
  c.users = 64;
  c.m = 0.5;
  c.snr_db = 0.0;
  c.slots = o.slots;
  c.seed = seed;
  return c;
}

SimulationConfig orthogonal_4x4(const VerifyOptions& o, std::uint64_t seed) {
  SimulationConfig c;
  c.frame = resolve({"orthonormal", 4, 0, {}, {}});
  c.users = 128;
  c.m = 0.5;
  c.snr_db = 5.0;
  c.slots = o.slots;
  c.seed = seed;
  return c;
}

const SinrModel kFigureModel{0.5, 7, 1.0, 1.3333};

std::vector<SinrModel> test_models() {
  return {{0.5, 7, 1.0, 4.0 / 3.0}, {3.0, 7, 1.0, 4.0 / 3.0}, {0.5, 13, std::sqrt(10.0), 2.25}, {0.5, 4, 1.0, 0.0}};
}

// ---------------------------------------------------------------------------

CriterionResult criterion_table1() {
  CriterionResult r{1, "correlation table reproduction", {}, 0.0};
  const auto start = Clock::now();
  const auto rows = table1_rows();
  const double secs = seconds_since(start);
  struct Expected {
    double d0, df;
    std::optional<double> dg, dm;
    double bound, dhs;
  };
  const std::vector<Expected> expected{{0.7071, 0.7071, 0.5774, 0.7071, 0.5774, 1.0},
                                       {0.7490, 0.4714, 0.4714, std::nullopt, 0.4714, 1.3333},
                                       {0.8440, 0.6565, std::nullopt, std::nullopt, 0.5, 2.0},
                                       {0.8597, 0.4330, 0.4330, std::nullopt, 0.4330, 2.2499},
                                       {0.9061, 0.5817, std::nullopt, 0.5, 0.4472, 3.0}};
  constexpr double tol = 1e-3;
  auto column = [&](const std::string& id, const std::string& name, auto measured, auto wanted) {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::optional<double> got = measured(rows[i]);
      const std::optional<double> want = wanted(expected[i]);
      const bool row_ok = got.has_value() == want.has_value() && (!got || within(*got, *want, tol));
      ok = ok && row_ok;
      detail += fmt("(%d,%d) ", rows[i].n_t, rows[i].n_beams) +
                (got ? fmt("%.4f", *got) : std::string("-")) + (row_ok ? "" : " [want " + (want ? fmt("%.4f", *want) : std::string("-")) + "]") +
                (i + 1 < rows.size() ? "; " : "");
    }
    r.checks.push_back({id, name + " within 1e-3", ok, detail});
  };
  using R = Table1Row;
  using E = Expected;
  column("1.1", "first-rows Fourier correlation", [](const R& x) { return std::optional<double>(x.delta_first_rows); },
         [](const E& e) { return std::optional<double>(e.d0); });
  column("1.2", "optimized Fourier correlation", [](const R& x) { return std::optional<double>(x.delta_fourier); },
         [](const E& e) { return std::optional<double>(e.df); });
  column("1.3", "Grassmannian correlation", [](const R& x) { return x.delta_grassmannian; },
         [](const E& e) { return e.dg; });
  column("1.4", "MUB correlation", [](const R& x) { return x.delta_mub; }, [](const E& e) { return e.dm; });
  column("1.5", "Welch lower bound", [](const R& x) { return std::optional<double>(x.welch_bound); },
         [](const E& e) { return std::optional<double>(e.bound); });
  column("1.6", "interference constant", [](const R& x) { return std::optional<double>(x.delta_hat_sq); },
         [](const E& e) { return std::optional<double>(e.dhs); });
  r.checks.push_back({"1.7", "runtime < 60 s including exhaustive row search", secs < 60.0, fmt("%.2f s", secs)});
  return r;
}

CriterionResult criterion_closed_form() {
  CriterionResult r{2, "closed-form throughput", {}, 0.0};
  const double n7 = throughput_closed_form({0.5, 7, 1.0, 1.3333}, 64);
  const double n9 = throughput_closed_form({0.5, 9, 1.0, 2.0}, 64);
  r.checks.push_back({"2.1", "N=7 closed form 3.99 +/- 0.01", within(n7, 3.99, 0.01), fmt("%.5f", n7)});
  r.checks.push_back({"2.2", "N=7 minus N=9 closed form 0.19 +/- 0.01", within(n7 - n9, 0.19, 0.01),
                      fmt("N=9 %.5f, difference %.5f", n9, n7 - n9)});
  return r;
}

struct SimulationAnchor {
  double simulated;
  double closed_form;
};

SimulationAnchor anchor_3x7(const VerifyOptions& o, std::uint64_t seed) {
  const SimulationConfig c = grassmannian_3x7(o, seed);
  const double dhs = require_delta_hat_sq(correlation_profile(build_frame(c.frame)));
  return {monte_carlo(c, o.run).mean, throughput_closed_form({c.m, 7, c.rho_linear(), dhs}, c.users)};
}

std::vector<CheckResult> checks_3x7(const VerifyOptions& o, std::uint64_t seed, const std::string& prefix) {
  const SimulationAnchor a = anchor_3x7(o, seed);
  const double gap = a.closed_form - a.simulated;
  return {{prefix + "1", fmt("seed %llu: simulated mean 3.93 +/- 0.05", static_cast<unsigned long long>(seed)),
           within(a.simulated, 3.93, 0.05), fmt("%.5f", a.simulated)},
          {prefix + "2", fmt("seed %llu: closed form minus simulation 0.06 +/- 0.03", static_cast<unsigned long long>(seed)),
           within(gap, 0.06, 0.03), fmt("closed form %.5f, gap %.5f", a.closed_form, gap)}};
}

CriterionResult criterion_monte_carlo(const VerifyOptions& o) {
  CriterionResult r{3, "Monte Carlo versus analysis, (3,7) frame", {}, 0.0};
  const auto start = Clock::now();
  r.checks = checks_3x7(o, o.seed, "3.");
  const double secs = seconds_since(start);

  SimulationConfig approx = grassmannian_3x7(o, o.seed);
  approx.sinr_model = SinrModelKind::kApproximate;
  const double approx_mean = monte_carlo(approx, o.run).mean;
  const double dhs = require_delta_hat_sq(correlation_profile(build_frame(approx.frame)));
  const double ideal = throughput_exact_max_law({0.5, 7, 1.0, dhs}, 64);
  r.checks[0].detail += fmt(" (exact SINR); approximate-SINR simulation %.5f; N E[log2(1+max)] under the "
                            "approximate law %.5f",
                            approx_mean, ideal);
  r.checks.push_back({"3.3", "runtime < 120 s", secs < 120.0, fmt("%.2f s", secs)});
  return r;
}

CriterionResult criterion_kl() {
  CriterionResult r{4, "Kullback-Leibler validation", {}, 0.0};
  const auto start = Clock::now();
  const SinrModel low{0.5, 7, 1.0, 1.3333};
  const SinrModel high{3.0, 7, 1.0, 1.3333};
  const double k8_low = kl_divergence(low, 8).divergence_bits;
  const double k8_high = kl_divergence(high, 8).divergence_bits;
  r.checks.push_back({"4.1", "K=8, m=0.5: 0.14 +/- 0.02 bits", within(k8_low, 0.14, 0.02), fmt("%.5f", k8_low)});
  r.checks.push_back({"4.2", "K=8, m=3: 0.025 +/- 0.01 bits", within(k8_high, 0.025, 0.01), fmt("%.5f", k8_high)});
  double worst = 0.0;
  std::string detail;
  for (const auto& model : {low, high}) {
    for (int k : {24, 32, 48, 64, 128, 256, 512, 1024, 2048}) {
      const double kl = kl_divergence(model, k).divergence_bits;
      worst = std::max(worst, kl);
      if (k == 24 || k == 2048) detail += fmt("m=%g K=%d: %.5f; ", model.m, k, kl);
    }
  }
  detail += fmt("max over K in [24, 2048]: %.5f", worst);
  r.checks.push_back({"4.3", "every K >= 24, both m: < 0.01 bits", worst < 0.01, detail});
  const double secs = seconds_since(start);
  r.checks.push_back({"4.4", "runtime < 30 s", secs < 30.0, fmt("%.2f s", secs)});
  return r;
}

double baseline_4x4(const VerifyOptions& o, std::uint64_t seed) { return monte_carlo(orthogonal_4x4(o, seed), o.run).mean; }

CriterionResult criterion_orthogonal(const VerifyOptions& o) {
  CriterionResult r{5, "(4,13) closed form and orthogonal baseline", {}, 0.0};
  const double cf = throughput_closed_form({0.5, 13, std::pow(10.0, 0.5), 2.2499}, 128);
  r.checks.push_back({"5.1", "N=13 closed form at 5 dB, K=128: 6.06 +/- 0.02", within(cf, 6.06, 0.02), fmt("%.5f", cf)});
  const double base = baseline_4x4(o, o.seed);
  r.checks.push_back({"5.2", "orthogonal baseline simulation: 7.31 +/- 0.20", within(base, 7.31, 0.20), fmt("%.5f", base)});
  return r;
}

// ---------------------------------------------------------------------------

CheckResult welch_attainment() {
  bool ok = true;
  std::string detail;
  for (int nt = 2; nt <= 4; ++nt) {
    const BeamformingMatrix f = build_frame(max_beam_grassmannian(nt));
    const double excess = correlation_profile(f).delta_max - welch_lower_bound(nt, f.n_beams());
    ok = ok && excess <= 1e-3 && excess >= -1e-9;
    detail += fmt("(%d,%d) excess %.2e; ", nt, f.n_beams(), excess);
  }
  return {"6.1", "Grassmannian frames meet the Welch bound within 1e-3", ok, detail};
}

CheckResult mub_generator_order() {
  double worst = 0.0;
  for (int nt : {2, 4}) {
    const ComplexMatrix d = mub_generator(nt);
    worst = std::max(worst, d.power(nt + 1).max_abs_diff(ComplexMatrix::identity(nt)));
  }
  return {"6.2", "MUB generator satisfies D^(n_t+1) = I within 1e-9", worst <= 1e-9, fmt("max deviation %.2e", worst)};
}

CheckResult mub_correlations() {
  double worst = 0.0;
  for (int nt : {2, 4}) {
    const auto profile = correlation_profile(mub_frame(nt));
    const double unbiased = 1.0 / std::sqrt(static_cast<double>(nt));
    for (double c : profile.off_diagonal()) worst = std::max(worst, std::min(std::abs(c), std::abs(c - unbiased)));
  }
  return {"6.3", "MUB cross-correlations lie in {0, 1/sqrt(n_t)} within 1e-9", worst <= 1e-9,
          fmt("max deviation %.2e", worst)};
}

CheckResult difference_set_coverage() {
  const std::vector<std::pair<int, std::vector<int>>> sets{{7, {0, 1, 3}},
                                                           {7, {0, 1, 5}},
                                                           {13, {0, 1, 3, 9}},
                                                           {7, difference_set_search(3).elements},
                                                           {13, difference_set_search(4).elements}};
  bool ok = true;
  std::string detail;
  for (const auto& [n, d] : sets) {
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (int x : d)
      for (int y : d)
        if (x != y) ++hits[static_cast<std::size_t>(((x - y) % n + n) % n)];
    bool set_ok = hits[0] == 0;
    for (int r = 1; r < n; ++r) set_ok = set_ok && hits[static_cast<std::size_t>(r)] == 1;
    ok = ok && set_ok;
    detail += "{";
    for (std::size_t i = 0; i < d.size(); ++i) detail += (i ? "," : "") + std::to_string(d[i]);
    detail += fmt("} mod %d %s; ", n, set_ok ? "covers" : "FAILS");
  }
  return {"6.4", "difference sets cover every nonzero residue exactly once", ok, detail};
}

CheckResult phase_invariance(std::uint64_t seed) {
  double worst = 0.0;
  std::uint64_t sub = 0;
  for (const auto& spec : default_report_constructions()) {
    if (spec.kind == "orthonormal") continue;
    const BeamformingMatrix base = build_frame(spec);
    const auto reference = correlation_profile(base);
    for (int trial = 0; trial < 20; ++trial) {
      RandomStream stream = derive_stream(seed, sub++);
      const auto p = correlation_profile(randomize_phases(base, stream));
      for (std::size_t i = 0; i < p.pairwise.size(); ++i)
        worst = std::max(worst, std::abs(p.pairwise[i] - reference.pairwise[i]));
    }
  }
  return {"6.5", "phase randomization preserves every correlation within 1e-12", worst <= 1e-12,
          fmt("max change %.2e", worst)};
}

CheckResult argmax_equivalence(std::uint64_t seed) {
  const std::vector<FrameSpec> specs{max_beam_grassmannian(2), max_beam_grassmannian(3), resolve({"fourier-opt", 3, 9, {}, {}}),
                                     max_beam_grassmannian(4), resolve({"mub", 4, 0, {}, {}})};
  std::vector<BeamformingMatrix> frames;
  for (const auto& s : specs) frames.push_back(build_frame(s));
  int mismatches = 0;
  constexpr int kInstances = 1000;
  for (int i = 0; i < kInstances; ++i) {
    RandomStream stream = derive_stream(seed, (std::uint64_t{1} << 62) + static_cast<std::uint64_t>(i));
    const BeamformingMatrix frame = randomize_phases(frames[static_cast<std::size_t>(i) % frames.size()], stream);
    const ChannelSet h = draw_channels(1, frame.n_t(), 1.0, stream);
    const double rho = 0.1 + 10.0 * stream.uniform();
    const auto gamma = per_beam_sinr(h.user(0), frame, rho);
    const int by_sinr = static_cast<int>(std::max_element(gamma.begin(), gamma.end()) - gamma.begin());
    const FeedbackRecord fb = user_feedback(0, h.user(0), frame, rho);
    if (fb.beam != by_sinr + 1 || fb.sinr != gamma[static_cast<std::size_t>(by_sinr)]) ++mismatches;
  }
  return {"6.6", "strongest-beam and max-SINR feedback agree on 1000 random instances", mismatches == 0,
          fmt("%d mismatches", mismatches)};
}

CheckResult density_consistency() {
  double norm_err = 0.0;
  double deriv_err = 0.0;
  for (const auto& model : test_models()) {
    const double top = model.delta_hat_sq > 0.0 ? model.support_limit() : kInfinity;
    const double scale = model.delta_hat_sq > 0.0 ? model.support_limit() : 20.0 / model.rate();
    QuadratureOptions q;
    q.abs_tol = 1e-12;
    const double mass = integrate_adaptive([&](double g) { return sinr_pdf(model, g); }, 0.0, top, q).value;
    norm_err = std::max(norm_err, std::abs(mass - 1.0));
    for (int i = 1; i < 20; ++i) {
      const double g = scale * i / 20.0;
      const double h = 1e-5 * scale;
      const double numeric = (sinr_cdf(model, g + h) - sinr_cdf(model, g - h)) / (2.0 * h);
      deriv_err = std::max(deriv_err, std::abs(numeric - sinr_pdf(model, g)));
    }
  }
  return {"6.7", "SINR pdf integrates to 1 (1e-8) and matches the cdf derivative (1e-6)",
          norm_err <= 1e-8 && deriv_err <= 1e-6, fmt("normalization error %.2e, derivative error %.2e", norm_err, deriv_err)};
}

CheckResult gumbel_anchor() {
  double worst = 0.0;
  for (const auto& model : test_models())
    for (int k : {2, 8, 64, 1024, 4096}) {
      const GumbelParams p = gumbel_params(model, k);
      worst = std::max(worst, std::abs(1.0 - sinr_cdf(model, p.a) - 1.0 / k));
    }
  return {"6.8", "Gumbel position satisfies 1 - F(a) = 1/K within 1e-10", worst <= 1e-10, fmt("max error %.2e", worst)};
}

CheckResult von_mises_decay() {
  bool ok = true;
  std::string detail;
  for (const auto& model : test_models()) {
    if (model.delta_hat_sq == 0.0) continue;
    double previous = kInfinity;
    double last = 0.0;
    for (double eps = 1e-2; eps >= 1e-6 * 0.999; eps /= 10.0) {
      const double g = model.support_limit() - eps;
      const double h = eps / 10.0;
      const double d = std::abs((growth_function(model, g + h) - growth_function(model, g - h)) / (2.0 * h));
      ok = ok && d < previous;
      previous = d;
      last = d;
    }
    ok = ok && last < 1e-5;
    detail += fmt("m=%g N=%d: |g'| at eps=1e-6 %.2e; ", model.m, model.n_beams, last);
  }
  return {"6.9", "growth-function derivative decays monotonically to 0 at the support edge", ok, detail};
}

CheckResult bound_ordering() {
  bool ok = true;
  std::string detail;
  for (const auto& model : test_models())
    for (int k : {16, 64, 256}) {
      const double up = throughput_upper_numeric(model, k);
      const double lo = throughput_lower_numeric(model, k);
      ok = ok && lo <= up + 1e-8;
      if (k == 64) detail += fmt("m=%g N=%d K=64: %.4f <= %.4f; ", model.m, model.n_beams, lo, up);
    }
  return {"6.10", "lower numeric bound <= upper numeric bound", ok, detail};
}

double max_sinr_ks(const VerifyOptions& o, int users, std::int64_t samples) {
  SimulationConfig c = grassmannian_3x7(o, o.seed);
  c.users = users;
  const auto x = empirical_max_sinr_samples(c, samples, o.run);
  const SinrModel model{c.m, 7, c.rho_linear(), require_delta_hat_sq(correlation_profile(build_frame(c.frame)))};
  if (users == 1) return ks_statistic(x, [&](double g) { return sinr_cdf(model, g); });
  const GumbelParams p = gumbel_params(model, users);
  return ks_statistic(x, [&](double g) { return extreme_cdf(p, 1, g); });
}

CheckResult ks_at_1024(const VerifyOptions& o) {
  const double d = max_sinr_ks(o, 1024, 10000);
  return {"6.11", "KS(empirical max SINR, Gumbel) < 0.05 at K=1024, 10^4 samples", d < 0.05, fmt("KS %.4f", d)};
}

CriterionResult criterion_properties(const VerifyOptions& o) {
  CriterionResult r{6, "property suites", {}, 0.0};
  const auto start = Clock::now();
  r.checks.push_back(welch_attainment());
  r.checks.push_back(mub_generator_order());
  r.checks.push_back(mub_correlations());
  r.checks.push_back(difference_set_coverage());
  r.checks.push_back(phase_invariance(o.seed));
  r.checks.push_back(argmax_equivalence(o.seed));
  r.checks.push_back(density_consistency());
  r.checks.push_back(gumbel_anchor());
  r.checks.push_back(von_mises_decay());
  r.checks.push_back(bound_ordering());
  r.checks.push_back(ks_at_1024(o));
  const double secs = seconds_since(start);
  r.checks.push_back({"6.12", "suite runtime < 300 s", secs < 300.0, fmt("%.2f s", secs)});
  return r;
}

// ---------------------------------------------------------------------------

CriterionResult criterion_determinism(const VerifyOptions& o) {
  CriterionResult r{7, "determinism and seed robustness", {}, 0.0};
  {
    nlohmann::json spec = {{"kind", "throughput_curve"},
                           {"parameters",
                            {{"constructions", {"grassmannian"}}, {"k", {16, 64}}, {"slots", 2000}, {"seed", o.seed}}}};
    const ExperimentSpec s = parse_experiment_spec(spec);
    const std::string first = render(s, run_experiment(s, RunOptions{1}));
    const std::string second = render(s, run_experiment(s, RunOptions{1}));
    const std::string threaded = render(s, run_experiment(s, RunOptions{4}));
    const ExperimentSpec kl = parse_experiment_spec({{"kind", "kl_curve"}});
    const ExperimentSpec t1 = parse_experiment_spec({{"kind", "table1"}, {"output", {{"format", "json"}}}});
    const bool ok = first == second && first == threaded &&
                    render(kl, run_experiment(kl)) == render(kl, run_experiment(kl)) &&
                    render(t1, run_experiment(t1)) == render(t1, run_experiment(t1));
    r.checks.push_back({"7.1", "reruns with identical spec and seed are byte-identical (1 and 4 threads)", ok,
                        fmt("throughput curve output %zu bytes", first.size())});
  }
  std::string detail3;
  std::string detail5;
  bool ok3 = true;
  bool ok5 = true;
  for (std::uint64_t seed : o.robustness_seeds) {
    const auto checks = checks_3x7(o, seed, "");
    ok3 = ok3 && checks[0].passed && checks[1].passed;
    detail3 += fmt("seed %llu: mean %s, %s; ", static_cast<unsigned long long>(seed), checks[0].detail.c_str(),
                   checks[1].detail.c_str());
    const double base = baseline_4x4(o, seed);
    ok5 = ok5 && within(base, 7.31, 0.20);
    detail5 += fmt("seed %llu: %.5f; ", static_cast<unsigned long long>(seed), base);
  }
  r.checks.push_back({"7.2", "criterion 3 holds for every robustness seed", ok3, detail3});
  r.checks.push_back({"7.3", "criterion 5 baseline holds for every robustness seed", ok5, detail5});
  return r;
}

// ---------------------------------------------------------------------------

CheckResult welch_never_beaten() {
  double worst = kInfinity;
  for (const auto& spec : default_report_constructions()) {
    const BeamformingMatrix f = build_frame(spec);
    worst = std::min(worst, correlation_profile(f).delta_max - welch_lower_bound(f.n_t(), f.n_beams()));
  }
  return {"0.1", "no construction falls below the Welch bound", worst >= -1e-9, fmt("min excess %.2e", worst)};
}

CheckResult power_accounting(std::uint64_t seed) {
  double worst = 0.0;
  const BeamformingMatrix base = build_frame(max_beam_grassmannian(3));
  for (int i = 0; i < 200; ++i) {
    RandomStream stream = derive_stream(seed, (std::uint64_t{3} << 61) + static_cast<std::uint64_t>(i));
    const ChannelSet h = draw_channels(1, 3, 0.5, stream);
    const BeamformingMatrix rotated = randomize_phases(base, stream);
    double a = 0.0;
    double b = 0.0;
    for (int n = 0; n < base.n_beams(); ++n) {
      a += std::norm(dot(h.user(0), base.beam(n)));
      b += std::norm(dot(h.user(0), rotated.beam(n)));
    }
    worst = std::max(worst, std::abs(a - b) / std::max(a, 1e-300));
  }
  return {"0.2", "total received beam power is invariant under phase randomization", worst <= 1e-12,
          fmt("max relative change %.2e", worst)};
}

CheckResult scheduling_optimality(std::uint64_t seed) {
  RandomStream stream = derive_stream(seed, (std::uint64_t{5} << 60));
  constexpr int kBeams = 7;
  std::vector<FeedbackRecord> fb;
  for (int k = 0; k < 1000; ++k)
    fb.push_back({k, 1 + static_cast<int>(stream.next_u32() % kBeams), stream.uniform()});
  const ScheduleOutcome out = schedule(fb, kBeams);
  bool ok = true;
  for (int n = 1; n <= kBeams; ++n) {
    std::optional<FeedbackRecord> best;
    for (const auto& f : fb)
      if (f.beam == n && (!best || f.sinr > best->sinr)) best = f;
    const auto& got = out.beams[static_cast<std::size_t>(n - 1)];
    ok = ok && best.has_value() == got.has_value() && (!got || (got->user == best->user && got->sinr == best->sinr));
  }
  return {"0.3", "scheduler picks the per-beam maximum (brute force, K=1000)", ok, ok ? "matches" : "differs"};
}

CheckResult occupancy(const VerifyOptions& o) {
  SimulationConfig c = grassmannian_3x7(o, o.seed);
  c.users = 2048;
  c.slots = 200;
  const double occ = monte_carlo(c, o.run).mean_occupancy;
  c.users = 3;
  c.slots = 2000;
  const double small = monte_carlo(c, o.run).mean_occupancy;
  return {"0.4", "occupancy <= min(N, K) and > 6.9 at K=2048", occ > 6.9 && occ <= 7.0 && small <= 3.0,
          fmt("K=2048: %.4f, K=3: %.4f", occ, small)};
}

CheckResult user_monotonicity(const VerifyOptions& o) {
  SimulationConfig c = grassmannian_3x7(o, o.seed);
  c.slots = 4000;
  c.users = 16;
  const auto lo = monte_carlo(c, o.run);
  c.users = 256;
  const auto hi = monte_carlo(c, o.run);
  const double sigma = std::hypot(lo.std_error, hi.std_error);
  return {"0.5", "throughput at K=256 exceeds K=16 by more than 3 sigma", hi.mean - lo.mean > 3.0 * sigma,
          fmt("K=16 %.4f, K=256 %.4f, sigma %.4f", lo.mean, hi.mean, sigma)};
}

CheckResult channel_law(std::uint64_t seed) {
  RandomStream stream = derive_stream(seed, (std::uint64_t{7} << 60));
  const ChannelSet h = draw_channels(100000, 1, 0.5, stream);
  std::vector<double> z;
  for (int k = 0; k < h.users(); ++k) z.push_back(std::norm(h.user(k)[0]));
  const double d = ks_statistic(z, [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-0.5 * x); });
  return {"0.6", "|h|^2 follows the exponential law of mean 1/m (KS < 0.01, 1e5 draws)", d < 0.01, fmt("KS %.4f", d)};
}

CheckResult extreme_normalization() {
  double worst = 0.0;
  const GumbelParams p = gumbel_params(kFigureModel, 64);
  QuadratureOptions q;
  q.abs_tol = 1e-12;
  q.breakpoints = {p.a};
  for (int n = 1; n <= 7; ++n)
    worst = std::max(worst, std::abs(integrate_adaptive([&](double g) { return extreme_pdf(p, n, g); }, -kInfinity,
                                                        kInfinity, q).value - 1.0));
  return {"0.7", "extreme-order densities n=1..7 integrate to 1 within 1e-8", worst <= 1e-8, fmt("max error %.2e", worst)};
}

CheckResult extreme_ordering() {
  const GumbelParams p = gumbel_params(kFigureModel, 64);
  bool ok = true;
  for (int i = -200; i <= 200; ++i) {
    const double g = p.a + p.b * i / 20.0;
    for (int n = 1; n < 7; ++n) ok = ok && extreme_cdf(p, n + 1, g) >= extreme_cdf(p, n, g);
  }
  return {"0.8", "lower extremes are stochastically smaller (cdf grid check)", ok, ok ? "ordered" : "violated"};
}

CheckResult closed_form_identity() {
  double worst = 0.0;
  double jensen = -kInfinity;
  for (const auto& model : test_models())
    for (int k : {16, 64, 256, 1024}) {
      const GumbelParams p = gumbel_params(model, k);
      const double direct = model.n_beams * std::log2(1.0 + p.a + p.b * kEulerGamma);
      worst = std::max(worst, std::abs(throughput_closed_form(model, k) - direct));
      jensen = std::max(jensen, throughput_upper_numeric(model, k) - direct);
    }
  return {"0.9", "closed form equals N log2(1 + a + b*gamma_E) and bounds the numeric upper bound",
          worst <= 1e-12 && jensen <= 1e-6, fmt("identity error %.2e, max(upper - closed) %.2e", worst, jensen)};
}

CheckResult kl_shape() {
  bool ok = true;
  std::string detail;
  for (double m : {0.5, 3.0}) {
    const SinrModel model{m, 7, 1.0, 1.3333};
    double previous = kInfinity;
    detail += fmt("m=%g:", m);
    for (int k : {8, 16, 32, 64}) {
      const double kl = kl_divergence(model, k).divergence_bits;
      ok = ok && kl >= -1e-9 && kl < previous;
      previous = kl;
      detail += fmt(" %.5f", kl);
    }
    detail += "; ";
  }
  return {"0.10", "KL divergence is non-negative and decreases over K = 8, 16, 32, 64", ok, detail};
}

CheckResult ks_convergence(const VerifyOptions& o) {
  bool ok = true;
  double previous = kInfinity;
  std::string detail;
  for (int k : {16, 64, 256, 1024}) {
    const double d = max_sinr_ks(o, k, 10000);
    ok = ok && d < previous;
    previous = d;
    detail += fmt("K=%d %.4f; ", k, d);
  }
  const double single = max_sinr_ks(o, 1, 10000);
  ok = ok && single < 0.02;
  detail += fmt("K=1 vs base law %.4f", single);
  return {"0.11", "empirical max-SINR approaches the Gumbel law as K grows", ok, detail};
}

CheckResult exponential_growth() {
  const SinrModel model{0.5, 7, 1.0, 0.0};
  double worst = 0.0;
  for (double g : {0.0, 1.0, 10.0, 100.0}) {
    worst = std::max(worst, std::abs(growth_function(model, g) - 1.0 / model.rate()));
    worst = std::max(worst, std::abs(growth_function_derivative(model, g)));
  }
  return {"0.12", "growth function is constant without interference", worst == 0.0, fmt("max deviation %.2e", worst)};
}

CheckResult thread_invariance(const VerifyOptions& o) {
  SimulationConfig c = grassmannian_3x7(o, o.seed);
  c.slots = 3000;
  const bool ok = monte_carlo(c, RunOptions{1}) == monte_carlo(c, RunOptions{3}) && monte_carlo(c, RunOptions{1}) == monte_carlo(c, RunOptions{1});
  return {"0.13", "Monte Carlo report is identical across reruns and thread counts", ok, ok ? "identical" : "differs"};
}

CheckResult two_user_upper_bound(std::uint64_t seed) {
  const SinrModel model{1.0, 1, 1.0, 0.0};
  RandomStream s = derive_stream(seed, 0);
  const int trials = 1000000;
  double acc = 0.0;
  for (int i = 0; i < trials; ++i)
    acc += std::log2(1.0 + std::max(-std::log(s.uniform_open()), -std::log(s.uniform_open())));
  const double mc = acc / trials;
  const double upper = throughput_upper_numeric(model, 2);
  return {"0.14", "Gumbel upper bound at K=2, N=1 within 0.1 of Monte Carlo", std::abs(upper - mc) < 0.1,
          fmt("bound %.5f, Monte Carlo %.5f", upper, mc)};
}

}  // namespace

bool CriterionResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CriterionResult run_criterion(int number, const VerifyOptions& o) {
  const auto start = Clock::now();
  CriterionResult r;
  switch (number) {
    case 1: r = criterion_table1(); break;
    case 2: r = criterion_closed_form(); break;
    case 3: r = criterion_monte_carlo(o); break;
    case 4: r = criterion_kl(); break;
    case 5: r = criterion_orthogonal(o); break;
    case 6: r = criterion_properties(o); break;
    case 7: r = criterion_determinism(o); break;
    default: throw InvalidArgument(fmt("no acceptance criterion %d (valid: 1..%d)", number, kCriterionCount));
  }
  r.seconds = seconds_since(start);
  return r;
}

CriterionResult run_invariant_suite(const VerifyOptions& o) {
  const auto start = Clock::now();
  CriterionResult r{0, "module invariants", {}, 0.0};
  r.checks.push_back(welch_never_beaten());
  r.checks.push_back(power_accounting(o.seed));
  r.checks.push_back(scheduling_optimality(o.seed));
  r.checks.push_back(occupancy(o));
  r.checks.push_back(user_monotonicity(o));
  r.checks.push_back(channel_law(o.seed));
  r.checks.push_back(extreme_normalization());
  r.checks.push_back(extreme_ordering());
  r.checks.push_back(closed_form_identity());
  r.checks.push_back(kl_shape());
  r.checks.push_back(ks_convergence(o));
  r.checks.push_back(exponential_growth());
  r.checks.push_back(thread_invariance(o));
  r.checks.push_back(two_user_upper_bound(o.seed));
  r.seconds = seconds_since(start);
  return r;
}

std::vector<CriterionResult> run_verify(const VerifyOptions& o) {
  std::vector<CriterionResult> out{run_invariant_suite(o)};
  for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i, o));
  return out;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed() ? "PASS" : "FAIL") << "  criterion " << r.number << ": " << r.title
        << fmt(" (%.2f s)", r.seconds) << '\n';
    for (const auto& c : r.checks)
      out << "    " << (c.passed ? "pass" : "FAIL") << "  " << c.id << " " << c.description << " -- " << c.detail << '\n';
  }
  return out.str();
}

nlohmann::json verdict_json(const std::vector<CriterionResult>& results) {
  nlohmann::json criteria = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"detail", c.detail}});
    criteria.push_back(
        {{"number", r.number}, {"title", r.title}, {"passed", r.passed()}, {"seconds", r.seconds}, {"checks", checks}});
    all = all && r.passed();
  }
  return {{"passed", all}, {"version", artifact_version()}, {"criteria", criteria}};
}

}  // namespace mbeam
