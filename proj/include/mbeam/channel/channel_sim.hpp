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

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbeam/frames/beamforming_matrix.hpp"
#include "mbeam/numerics/random_stream.hpp"

namespace mbeam {

/// K single-antenna users' flat Rayleigh channels to an n_t antenna array.
/// Each h_k is stored contiguously.
class ChannelSet {
 public:
  ChannelSet(int users, int n_t);

  int users() const { return matrix_.cols(); }
  int n_t() const { return matrix_.rows(); }

  std::span<const Complex> user(int k) const { return matrix_.column(k); }
  std::span<Complex> user(int k) { return matrix_.column(k); }

  bool operator==(const ChannelSet& other) const { return matrix_.data() == other.matrix_.data(); }

 private:
  ComplexMatrix matrix_;
};

/// i.i.d. CN(0, 1/m) entries, drawn user by user, antenna by antenna.
ChannelSet draw_channels(int users, int n_t, double m, RandomStream& stream);

/// How a user evaluates its per-beam SINR.
enum class SinrModelKind {
  /// Full inter-beam interference (rho/N) sum_{l != n} |h b_l|^2.
  kExact,
  /// Interference approximated as delta_hat_sq (rho/N) |h b_n|^2, i.e. the
  /// channel is assumed aligned with the beam it is strongest on.
  kApproximate,
};

std::string to_string(SinrModelKind kind);
SinrModelKind parse_sinr_model(const std::string& text);

/// gamma_n = (rho/N)|h b_n|^2 / (1 + (rho/N) sum_{l != n} |h b_l|^2) for every beam.
std::vector<double> per_beam_sinr(std::span<const Complex> h, const BeamformingMatrix& frame, double rho_linear);

/// gamma_n = (rho/N)|h b_n|^2 / (1 + delta_hat_sq (rho/N) |h b_n|^2).
std::vector<double> per_beam_sinr_approximate(std::span<const Complex> h, const BeamformingMatrix& frame,
                                              double rho_linear, double delta_hat_sq);

struct FeedbackRecord {
  int user = 0;      // 0-based
  int beam = 1;      // 1-based
  double sinr = 0.0; // linear

  bool operator==(const FeedbackRecord&) const = default;
};

/// Strongest beam argmax_n |h b_n| (ties to the lowest index) and the
/// exact SINR there. Since gamma_n is increasing in |h b_n|^2 for a fixed
/// user, this is also argmax_n gamma_n.
FeedbackRecord user_feedback(int user, std::span<const Complex> h, const BeamformingMatrix& frame,
                             double rho_linear);

struct ScheduledUser {
  int user = 0;
  double sinr = 0.0;
  bool operator==(const ScheduledUser&) const = default;
};

struct ScheduleOutcome {
  /// Index n-1 holds beam n's winner, or nullopt when no user fed back n.
  std::vector<std::optional<ScheduledUser>> beams;
  int occupancy = 0;
};

/// Max-SINR scheduling per beam; ties go to the lowest user index.
ScheduleOutcome schedule(std::span<const FeedbackRecord> feedback, int n_beams);

/// Sum over occupied beams of log2(1 + sinr), in bit/s/Hz.
double slot_throughput(const ScheduleOutcome& outcome);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace mbeam
