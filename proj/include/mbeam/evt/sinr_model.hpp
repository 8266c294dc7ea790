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

namespace mbeam {

/// Distribution of the per-beam SINR under the aligned-interference
/// approximation gamma = (rho/N) z / (1 + delta_hat_sq (rho/N) z), with
/// z exponential of mean 1/m. Supported on [0, 1/delta_hat_sq).
struct SinrModel {
  double m = 0.5;
  int n_beams = 7;
  double rho = 1.0;  // linear SNR
  double delta_hat_sq = 0.0;

  /// Throws InvalidArgument when m, rho <= 0, N < 1 or delta_hat_sq < 0.
  void validate() const;

  /// 1/delta_hat_sq, or +inf when delta_hat_sq = 0.
  double support_limit() const;

  /// m N / rho, the rate of the exponential tail.
  double rate() const { return m * n_beams / rho; }
};

double sinr_pdf(const SinrModel& model, double gamma);
double sinr_cdf(const SinrModel& model, double gamma);

/// ln f(gamma), -inf outside the support.
double log_sinr_pdf(const SinrModel& model, double gamma);
/// ln F(gamma), accurate when F is tiny; -inf for gamma <= 0.
double log_sinr_cdf(const SinrModel& model, double gamma);

/// (1 - F) / f = rho (1 - delta_hat_sq gamma)^2 / (m N).
double growth_function(const SinrModel& model, double gamma);

/// d/dgamma of growth_function, in closed form.
double growth_function_derivative(const SinrModel& model, double gamma);

}  // namespace mbeam
