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

#include "mbeam/channel/channel_sim.hpp"

#include <cassert>
#include <cmath>

#include "mbeam/error.hpp"

namespace mbeam {

ChannelSet::ChannelSet(int users, int n_t) : matrix_(n_t, users) {}

ChannelSet draw_channels(int users, int n_t, double m, RandomStream& stream) {
  require(users >= 1, "draw_channels: need at least one user");
  require(n_t >= 1, "draw_channels: need at least one antenna");
  require(m > 0.0 && std::isfinite(m), "draw_channels: fading parameter m must be positive");
  ChannelSet set(users, n_t);
  const double variance = 1.0 / m;
  for (int k = 0; k < users; ++k)
    for (auto& v : set.user(k)) v = sample_complex_gaussian(stream, variance);
  return set;
}

std::string to_string(SinrModelKind kind) {
  return kind == SinrModelKind::kExact ? "exact" : "approximate";
}

SinrModelKind parse_sinr_model(const std::string& text) {
  if (text == "exact") return SinrModelKind::kExact;
  if (text == "approximate") return SinrModelKind::kApproximate;
  throw InvalidArgument("sinr model must be 'exact' or 'approximate', got '" + text + "'");
}

namespace {

std::vector<double> beam_powers(std::span<const Complex> h, const BeamformingMatrix& frame, double rho_linear) {
  require(rho_linear > 0.0, "SINR: rho must be positive");
  require(static_cast<int>(h.size()) == frame.n_t(), "SINR: channel length must equal n_t");
  const double per_beam = rho_linear / frame.n_beams();
  std::vector<double> p(static_cast<std::size_t>(frame.n_beams()));
  for (int n = 0; n < frame.n_beams(); ++n) p[static_cast<std::size_t>(n)] = per_beam * std::norm(dot(h, frame.beam(n)));
  return p;
}

}  // namespace

std::vector<double> per_beam_sinr(std::span<const Complex> h, const BeamformingMatrix& frame, double rho_linear) {
  std::vector<double> p = beam_powers(h, frame, rho_linear);
  std::vector<double> gamma(p.size());
  for (std::size_t n = 0; n < p.size(); ++n) {
    double interference = 0.0;
    for (std::size_t l = 0; l < p.size(); ++l)
      if (l != n) interference += p[l];
    gamma[n] = p[n] / (1.0 + interference);
  }
  return gamma;
}

std::vector<double> per_beam_sinr_approximate(std::span<const Complex> h, const BeamformingMatrix& frame,
                                              double rho_linear, double delta_hat_sq) {
  require(delta_hat_sq >= 0.0, "SINR: delta_hat_sq must be non-negative");
  std::vector<double> p = beam_powers(h, frame, rho_linear);
  for (auto& v : p) v = v / (1.0 + delta_hat_sq * v);
  return p;
}

FeedbackRecord user_feedback(int user, std::span<const Complex> h, const BeamformingMatrix& frame,
                             double rho_linear) {
  const std::vector<double> gamma = per_beam_sinr(h, frame, rho_linear);
  int strongest = 0;  // argmax |h b_n|
  int best_sinr = 0;  // argmax gamma_n
  double strongest_gain = -1.0;
  for (int n = 0; n < frame.n_beams(); ++n) {
    const double gain = std::norm(dot(h, frame.beam(n)));
    if (gain > strongest_gain) {
      strongest_gain = gain;
      strongest = n;
    }
    if (gamma[static_cast<std::size_t>(n)] > gamma[static_cast<std::size_t>(best_sinr)]) best_sinr = n;
  }
  assert(strongest == best_sinr || gamma[static_cast<std::size_t>(strongest)] == gamma[static_cast<std::size_t>(best_sinr)]);
  (void)best_sinr;
  return {user, strongest + 1, gamma[static_cast<std::size_t>(strongest)]};
}

ScheduleOutcome schedule(std::span<const FeedbackRecord> feedback, int n_beams) {
  require(n_beams >= 1, "schedule: need at least one beam");
  ScheduleOutcome out;
  out.beams.assign(static_cast<std::size_t>(n_beams), std::nullopt);
  for (const auto& f : feedback) {
    require(f.beam >= 1 && f.beam <= n_beams, "schedule: feedback beam index out of range");
    auto& slot = out.beams[static_cast<std::size_t>(f.beam - 1)];
    if (!slot || f.sinr > slot->sinr || (f.sinr == slot->sinr && f.user < slot->user))
      slot = ScheduledUser{f.user, f.sinr};
  }
  for (const auto& b : out.beams)
    if (b) ++out.occupancy;
  return out;
}

double slot_throughput(const ScheduleOutcome& outcome) {
  double sum = 0.0;
  for (const auto& b : outcome.beams)
    if (b) sum += std::log2(1.0 + b->sinr);
  return sum;
}

}  // namespace mbeam
