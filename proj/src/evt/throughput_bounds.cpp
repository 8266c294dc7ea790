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


#include "mbeam/evt/throughput_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "mbeam/error.hpp"
#include "mbeam/numerics/quadrature.hpp"

namespace mbeam {
namespace {

// Beyond u = 250 the weight u^{n-1} e^{-u} is below 1e-90 for n <= 16.
constexpr double kUpperCut = 250.0;

}  // namespace

double extreme_log_rate(const GumbelParams& p, int n, double abs_tol) {
  require(p.b > 0.0, "Gumbel scale b must be positive");
  const double norm = factorial_of_predecessor(n);
  const double top = p.a / p.b >= std::log(kUpperCut) ? kUpperCut : std::exp(p.a / p.b);
  auto integrand = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double arg = 1.0 + p.a - p.b * std::log(u);
    if (arg <= 1.0) return 0.0;  // gamma < 0
    return std::log2(arg) * std::exp((n - 1) * std::log(u) - u) / norm;
  };
  QuadratureOptions opts;
  opts.abs_tol = abs_tol;
  if (static_cast<double>(n - 1) < top && n > 1) opts.breakpoints.push_back(static_cast<double>(n - 1));
  if (1.0 < top) opts.breakpoints.push_back(1.0);
  std::sort(opts.breakpoints.begin(), opts.breakpoints.end());
  opts.breakpoints.erase(std::unique(opts.breakpoints.begin(), opts.breakpoints.end()), opts.breakpoints.end());
  return integrate_adaptive(integrand, 0.0, top, opts).value;
}

double throughput_upper_numeric(const SinrModel& model, int users) {
  const GumbelParams p = gumbel_params(model, users);
  return model.n_beams * extreme_log_rate(p, 1);
}

double throughput_lower_numeric(const SinrModel& model, int users) {
  require(users >= model.n_beams + 1, "lower bound needs K >= N + 1");
  const GumbelParams p = gumbel_params(model, users);
  double sum = 0.0;
  for (int n = 1; n <= model.n_beams; ++n) sum += extreme_log_rate(p, n);
  return sum;
}

double throughput_closed_form(const SinrModel& model, int users) {
  model.validate();
  require(users >= 2, "closed-form throughput needs K >= 2");
  const double mn = model.m * model.n_beams;
  const double log_k = std::log(static_cast<double>(users));
  const double rho = model.rho;
  const double denom = mn + rho * model.delta_hat_sq * log_k;
  const double snr = (rho * mn * (kEulerGamma + log_k) + rho * rho * model.delta_hat_sq * log_k * log_k) /
                     (denom * denom);
  return model.n_beams * std::log2(1.0 + snr);
}

double throughput_exact_max_law(const SinrModel& model, int users) {
  model.validate();
  require(users >= 1, "exact max law needs K >= 1");
  // E[log2(1 + X)] = int_0^inf P(X > g) / ((1 + g) ln 2) dg with P(X > g) = 1 - F(g)^K.
  auto tail = [&](double g) {
    const double log_f = log_sinr_cdf(model, g);
    return -std::expm1(users * log_f) / ((1.0 + g) * std::log(2.0));
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-10;
  const double limit = model.support_limit();
  if (users >= 2) {
    const GumbelParams p = gumbel_params(model, users);
    if (p.a < limit) opts.breakpoints.push_back(p.a);
  }
  return model.n_beams * integrate_adaptive(tail, 0.0, limit, opts).value;
}

ThroughputBounds throughput_bounds(const SinrModel& model, int users) {
  ThroughputBounds out;
  out.upper_numeric = throughput_upper_numeric(model, users);
  if (users >= model.n_beams + 1) out.lower_numeric = throughput_lower_numeric(model, users);
  out.upper_closed_form = throughput_closed_form(model, users);
  return out;
}

}  // namespace mbeam
