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


#include "mbeam/evt/extreme_value.hpp"

#include <cmath>
#include <limits>

#include "mbeam/error.hpp"
#include "mbeam/evt/sinr_model.hpp"

namespace mbeam {

GumbelParams gumbel_params(const SinrModel& model, int users) {
  model.validate();
  require(users >= 2, "Gumbel parameters need K >= 2");
  const double mn = model.m * model.n_beams;
  const double log_k = std::log(static_cast<double>(users));
  const double denom = mn + model.rho * model.delta_hat_sq * log_k;
  return {model.rho * log_k / denom, model.rho * mn / (denom * denom)};
}

double factorial_of_predecessor(int n) {
  require(n >= 1, "extreme order n must be >= 1");
  double f = 1.0;
  for (int i = 2; i < n; ++i) f *= i;
  return f;
}

double log_extreme_pdf(const GumbelParams& p, int n, double gamma) {
  require(p.b > 0.0, "Gumbel scale b must be positive");
  const double u = (gamma - p.a) / p.b;
  const double e = std::exp(-u);
  if (std::isinf(e)) return -std::numeric_limits<double>::infinity();
  return -n * u - e - std::log(factorial_of_predecessor(n)) - std::log(p.b);
}

double extreme_pdf(const GumbelParams& p, int n, double gamma) {
  return std::exp(log_extreme_pdf(p, n, gamma));
}

double extreme_cdf(const GumbelParams& p, int n, double gamma) {
  require(p.b > 0.0, "Gumbel scale b must be positive");
  require(n >= 1, "extreme order n must be >= 1");
  const double u = (gamma - p.a) / p.b;
  const double e = std::exp(-u);
  if (std::isinf(e)) return 0.0;
  double sum = 0.0;
  double log_fact = 0.0;
  for (int l = 0; l < n; ++l) {
    if (l > 0) log_fact += std::log(static_cast<double>(l));
    sum += std::exp(-e - l * u - log_fact);
  }
  return std::min(1.0, sum);
}

}  // namespace mbeam
