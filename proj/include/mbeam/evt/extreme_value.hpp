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

namespace mbeam {

struct SinrModel;

/// Norming constants of the Gumbel law approximating the maximum of K
/// i.i.d. SINRs: position a and scale b.
struct GumbelParams {
  double a = 0.0;
  double b = 1.0;
};

/// a solves 1 - F(a) = 1/K; b = g(a) is the growth function there. Both
/// in closed form. Requires K >= 2.
GumbelParams gumbel_params(const SinrModel& model, int users);

/// Limiting cdf / pdf of the n-th largest of K SINRs (n = 1 is the
/// maximum), in terms of u = (gamma - a)/b:
///   cdf = exp(-e^{-u}) sum_{l<n} e^{-l u}/l!
///   pdf = e^{-n u} exp(-e^{-u}) / ((n-1)! b)
double extreme_cdf(const GumbelParams& params, int n, double gamma);
double extreme_pdf(const GumbelParams& params, int n, double gamma);
double log_extreme_pdf(const GumbelParams& params, int n, double gamma);

/// (n-1)!, exact for the small n used here.
double factorial_of_predecessor(int n);

}  // namespace mbeam
