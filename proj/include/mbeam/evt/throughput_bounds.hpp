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

#include <optional>

#include "mbeam/evt/extreme_value.hpp"
#include "mbeam/evt/sinr_model.hpp"

namespace mbeam {

/// Euler-Mascheroni constant, the mean of the standard Gumbel law.
inline constexpr double kEulerGamma = 0.57721566490153286;

/// E[log2(1 + gamma)] when gamma is the n-th upper extreme with the given
/// Gumbel parameters, integrating over gamma >= 0 only. With
/// u = exp(-(gamma - a)/b) the integral becomes
///   int_0^{e^{a/b}} log2(1 + a - b ln u) u^{n-1} e^{-u} du / (n-1)!.
double extreme_log_rate(const GumbelParams& params, int n, double abs_tol = 1e-10);

/// N E_1[log2(1 + gamma)] under the Gumbel law of the maximum.
double throughput_upper_numeric(const SinrModel& model, int users);

/// sum_{n=1}^{N} E_n[log2(1 + gamma)] over the N upper extremes. Requires
/// K >= N + 1.
double throughput_lower_numeric(const SinrModel& model, int users);

/// N log2(1 + a + b * Euler gamma), written out in the model parameters.
double throughput_closed_form(const SinrModel& model, int users);

/// N E[log2(1 + max of K i.i.d. SINRs)] under the exact max law F^K,
/// without the Gumbel approximation. Diagnostic reference.
double throughput_exact_max_law(const SinrModel& model, int users);

struct ThroughputBounds {
  double upper_numeric = 0.0;
  std::optional<double> lower_numeric;  // absent when K <= N
  double upper_closed_form = 0.0;
};

ThroughputBounds throughput_bounds(const SinrModel& model, int users);

}  // namespace mbeam
