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

#include "mbeam/channel/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "mbeam/error.hpp"
#include "mbeam/frames/constructions.hpp"
#include "mbeam/frames/correlation.hpp"

namespace mbeam {
namespace {

constexpr std::uint64_t kMaxSinrSubstreamBase = std::uint64_t{1} << 63;

int worker_count(const RunOptions& options, std::int64_t work) {
  int n = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(1, n);
  return static_cast<int>(std::min<std::int64_t>(n, std::max<std::int64_t>(1, work)));
}

// Runs body(begin, end) over contiguous index blocks on `workers` threads.
template <typename Body>
void parallel_blocks(std::int64_t count, int workers, Body body) {
  if (workers <= 1) {
    body(std::int64_t{0}, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::int64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = std::min(count, w * chunk);
    const std::int64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double interference_constant(const BeamformingMatrix& base) {
  if (base.construction().kind == ConstructionKind::kOrthonormalRandom) return 0.0;
  return require_delta_hat_sq(correlation_profile(base));
}

BeamformingMatrix slot_frame(const BeamformingMatrix& base, RandomStream& stream) {
  if (base.construction().kind == ConstructionKind::kOrthonormalRandom)
    return random_orthonormal(base.n_t(), stream);
  return randomize_phases(base, stream);
}

struct SlotKernel {
  const BeamformingMatrix& base;
  const SimulationConfig& config;
  double delta_hat_sq;

  double run(std::int64_t slot, int* occupancy, std::vector<std::int64_t>* beam_counts) const {
    RandomStream stream = derive_stream(config.seed, static_cast<std::uint64_t>(slot));
    const BeamformingMatrix frame = slot_frame(base, stream);
    const ChannelSet channels = draw_channels(config.users, frame.n_t(), config.m, stream);
    const int n = frame.n_beams();
    const double per_beam = config.rho_linear() / n;

    std::vector<double> power(static_cast<std::size_t>(n));
    std::vector<FeedbackRecord> feedback;
    feedback.reserve(static_cast<std::size_t>(config.users));
    for (int k = 0; k < config.users; ++k) {
      const auto h = channels.user(k);
      double total = 0.0;
      int strongest = 0;
      for (int b = 0; b < n; ++b) {
        const double p = per_beam * std::norm(dot(h, frame.beam(b)));
        power[static_cast<std::size_t>(b)] = p;
        total += p;
        if (p > power[static_cast<std::size_t>(strongest)]) strongest = b;
      }
      const double p = power[static_cast<std::size_t>(strongest)];
      const double sinr = config.sinr_model == SinrModelKind::kExact
                              ? p / (1.0 + std::max(0.0, total - p))
                              : p / (1.0 + delta_hat_sq * p);
      feedback.push_back({k, strongest + 1, sinr});
    }
    const ScheduleOutcome outcome = schedule(feedback, n);
    if (occupancy) *occupancy = outcome.occupancy;
    if (beam_counts) {
      beam_counts->resize(static_cast<std::size_t>(n), 0);
      for (int b = 0; b < n; ++b)
        if (outcome.beams[static_cast<std::size_t>(b)]) ++(*beam_counts)[static_cast<std::size_t>(b)];
    }
    return slot_throughput(outcome);
  }
};

}  // namespace

SimulationConfig validated(const SimulationConfig& config) {
  SimulationConfig c = config;
  c.frame = resolve(config.frame);
  require(c.users >= 1, "simulation: users K must be >= 1");
  require(c.slots >= 1, "simulation: slots must be >= 1");
  require(c.m > 0.0 && std::isfinite(c.m), "simulation: fading parameter m must be positive");
  require(std::isfinite(c.snr_db), "simulation: snr_db must be finite");
  return c;
}

double simulate_slot(const BeamformingMatrix& base, const SimulationConfig& config, std::int64_t slot,
                     int* occupancy, std::vector<std::int64_t>* beam_counts) {
  const double dhs = config.sinr_model == SinrModelKind::kApproximate ? interference_constant(base) : 0.0;
  return SlotKernel{base, config, dhs}.run(slot, occupancy, beam_counts);
}

ThroughputReport monte_carlo(const SimulationConfig& raw, const RunOptions& options) {
  const SimulationConfig config = validated(raw);
  const BeamformingMatrix base = build_frame(config.frame);
  const double dhs = config.sinr_model == SinrModelKind::kApproximate ? interference_constant(base) : 0.0;
  const SlotKernel kernel{base, config, dhs};
  const int n = base.n_beams();

  const auto slots = config.slots;
  std::vector<double> throughput(static_cast<std::size_t>(slots));
  std::vector<int> occupancy(static_cast<std::size_t>(slots));
  const int workers = worker_count(options, slots);
  std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(workers),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  parallel_blocks(slots, workers, [&](std::int64_t begin, std::int64_t end, int w) {
    for (std::int64_t s = begin; s < end; ++s)
      throughput[static_cast<std::size_t>(s)] =
          kernel.run(s, &occupancy[static_cast<std::size_t>(s)], &counts[static_cast<std::size_t>(w)]);
  });

  ThroughputReport r;
  r.slots = slots;
  double sum = 0.0;
  double occ = 0.0;
  for (std::int64_t s = 0; s < slots; ++s) {
    sum += throughput[static_cast<std::size_t>(s)];
    occ += occupancy[static_cast<std::size_t>(s)];
  }
  r.mean = sum / static_cast<double>(slots);
  r.mean_occupancy = occ / static_cast<double>(slots);
  double ss = 0.0;
  for (double x : throughput) ss += (x - r.mean) * (x - r.mean);
  r.std_error = slots > 1 ? std::sqrt(ss / static_cast<double>(slots - 1) / static_cast<double>(slots)) : 0.0;
  r.ci_low = r.mean - 1.96 * r.std_error;
  r.ci_high = r.mean + 1.96 * r.std_error;
  r.per_beam_counts.assign(static_cast<std::size_t>(n), 0);
  for (const auto& c : counts)
    for (int b = 0; b < n; ++b) r.per_beam_counts[static_cast<std::size_t>(b)] += c[static_cast<std::size_t>(b)];
  return r;
}

std::vector<double> empirical_max_sinr_samples(const SimulationConfig& raw, std::int64_t samples,
                                               const RunOptions& options) {
  require(samples >= 1, "empirical_max_sinr_samples: samples must be >= 1");
  const SimulationConfig config = validated(raw);
  const BeamformingMatrix base = build_frame(config.frame);
  const double dhs = interference_constant(base);
  const double per_beam = config.rho_linear() / base.n_beams();

  std::vector<double> out(static_cast<std::size_t>(samples));
  parallel_blocks(samples, worker_count(options, samples), [&](std::int64_t begin, std::int64_t end, int) {
    for (std::int64_t t = begin; t < end; ++t) {
      RandomStream stream = derive_stream(config.seed, kMaxSinrSubstreamBase + static_cast<std::uint64_t>(t));
      const BeamformingMatrix frame = slot_frame(base, stream);
      const ChannelSet channels = draw_channels(config.users, frame.n_t(), config.m, stream);
      double best = 0.0;
      for (int k = 0; k < config.users; ++k) {
        const double p = per_beam * std::norm(dot(channels.user(k), frame.beam(0)));
        best = std::max(best, p / (1.0 + dhs * p));
      }
      out[static_cast<std::size_t>(t)] = best;
    }
  });
  return out;
}

}  // namespace mbeam
