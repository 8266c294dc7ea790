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
#include <string>
#include <vector>

#include <json.hpp>

#include "mbeam/channel/channel_sim.hpp"
#include "mbeam/frames/registry.hpp"

namespace mbeam {

/// One downlink experiment.
struct SimulationConfig {
  FrameSpec frame;
  int users = 64;
  double m = 0.5;
  double snr_db = 0.0;
  std::int64_t slots = 20000;
  std::uint64_t seed = 42;
  SinrModelKind sinr_model = SinrModelKind::kExact;

  double rho_linear() const { return db_to_linear(snr_db); }
  bool operator==(const SimulationConfig&) const = default;
};

/// Resolves the frame spec and checks every field; throws InvalidArgument.
SimulationConfig validated(const SimulationConfig& config);

struct ThroughputReport {
  std::int64_t slots = 0;
  double mean = 0.0;          // bit/s/Hz
  double std_error = 0.0;
  double ci_low = 0.0;        // mean -/+ 1.96 std_error
  double ci_high = 0.0;
  double mean_occupancy = 0.0;
  std::vector<std::int64_t> per_beam_counts;  // slots in which beam n was occupied

  bool operator==(const ThroughputReport&) const = default;
};

struct RunOptions {
  /// Worker threads; 0 uses the hardware concurrency. Results do not
  /// depend on this value.
  int threads = 0;
};

/// Slot s uses substream s of the master seed. Within a slot the stream is
/// consumed in a fixed order: N phase angles (or the n_t x n_t Gaussian
/// matrix of the orthonormal baseline), then K x n_t channel entries.
/// Per-slot results are combined in slot order, so the report is
/// bit-identical for any thread count.
ThroughputReport monte_carlo(const SimulationConfig& config, const RunOptions& options = {});

/// Per-slot throughput for a single slot; exposed for tests.
double simulate_slot(const BeamformingMatrix& base, const SimulationConfig& config, std::int64_t slot,
                     int* occupancy = nullptr, std::vector<std::int64_t>* beam_counts = nullptr);

/// Maximum over K users of the beam-1 SINR of the phase-randomized frame,
/// one value per trial. The SINR follows the aligned-channel law
/// (rho/N) z / (1 + delta_hat_sq (rho/N) z) with z = |h b_1|^2, whose
/// distribution the extreme-value analysis describes. Trial t uses
/// substream 2^63 + t, disjoint from monte_carlo's slot substreams.
std::vector<double> empirical_max_sinr_samples(const SimulationConfig& config, std::int64_t samples,
                                               const RunOptions& options = {});

void to_json(nlohmann::json& j, const SimulationConfig& config);
void from_json(const nlohmann::json& j, SimulationConfig& config);
void to_json(nlohmann::json& j, const ThroughputReport& report);

/// CSV columns: construction,n_t,n,K,m,snr_db,slots,seed,mean,stderr,ci_lo,ci_hi,occupancy
std::string report_csv_header();
std::string report_csv_row(const SimulationConfig& config, const ThroughputReport& report);

}  // namespace mbeam
