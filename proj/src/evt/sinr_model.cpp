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


#include "mbeam/evt/sinr_model.hpp"

#include <limits>

#include "mbeam/error.hpp"

namespace mbeam {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// m N gamma / (rho (1 - delta_hat_sq gamma)) for gamma inside the support.
double exponent(const SinrModel& model, double gamma) {
  return model.rate() * gamma / (1.0 - model.delta_hat_sq * gamma);
}

bool beyond_support(const SinrModel& model, double gamma) {
  return model.delta_hat_sq > 0.0 && gamma * model.delta_hat_sq >= 1.0;
}

}  // namespace

void SinrModel::validate() const {
  require(m > 0.0 && std::isfinite(m), "SINR model: m must be positive");
  require(rho > 0.0 && std::isfinite(rho), "SINR model: rho must be positive");
  require(n_beams >= 1, "SINR model: N must be >= 1");
  require(delta_hat_sq >= 0.0 && std::isfinite(delta_hat_sq), "SINR model: delta_hat_sq must be >= 0");
}

double SinrModel::support_limit() const {
  return delta_hat_sq > 0.0 ? 1.0 / delta_hat_sq : std::numeric_limits<double>::infinity();
}

double sinr_pdf(const SinrModel& model, double gamma) {
  model.validate();
  if (gamma < 0.0 || beyond_support(model, gamma)) return 0.0;
  const double s = 1.0 - model.delta_hat_sq * gamma;
  return model.rate() / (s * s) * std::exp(-exponent(model, gamma));
}

double sinr_cdf(const SinrModel& model, double gamma) {
  model.validate();
  if (gamma <= 0.0) return 0.0;
  if (beyond_support(model, gamma)) return 1.0;
  return -std::expm1(-exponent(model, gamma));
}

double log_sinr_pdf(const SinrModel& model, double gamma) {
  model.validate();
  if (gamma < 0.0 || beyond_support(model, gamma)) return kNegInf;
  const double s = 1.0 - model.delta_hat_sq * gamma;
  return std::log(model.rate()) - 2.0 * std::log(s) - exponent(model, gamma);
}

double log_sinr_cdf(const SinrModel& model, double gamma) {
  model.validate();
  if (gamma <= 0.0) return kNegInf;
  if (beyond_support(model, gamma)) return 0.0;
  const double x = exponent(model, gamma);
  return x < 0.6931471805599453 ? std::log(-std::expm1(-x)) : std::log1p(-std::exp(-x));
}

double growth_function(const SinrModel& model, double gamma) {
  model.validate();
  const double s = 1.0 - model.delta_hat_sq * gamma;
  return s * s / model.rate();
}

double growth_function_derivative(const SinrModel& model, double gamma) {
  model.validate();
  return -2.0 * model.delta_hat_sq * (1.0 - model.delta_hat_sq * gamma) / model.rate();
}

}  // namespace mbeam
