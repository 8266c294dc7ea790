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


#include "mbeam/evt/kl_divergence.hpp"

#include <cmath>
#include <vector>

#include "mbeam/error.hpp"
#include "mbeam/evt/extreme_value.hpp"
#include "mbeam/numerics/quadrature.hpp"

namespace mbeam {

KlReport kl_divergence(const SinrModel& model, int users) {
  model.validate();
  require(users >= 2, "KL divergence needs K >= 2");
  const GumbelParams p = gumbel_params(model, users);
  const double log_k = std::log(static_cast<double>(users));
  const double limit = model.support_limit();

  auto integrand = [&](double g) {
    const double log_f = log_k + log_sinr_pdf(model, g) + (users - 1) * log_sinr_cdf(model, g);
    if (!std::isfinite(log_f)) return 0.0;
    const double f = std::exp(log_f);
    if (f == 0.0) return 0.0;
    return f * (log_f - log_extreme_pdf(p, 1, g)) / std::log(2.0);
  };

  QuadratureOptions opts;
  opts.abs_tol = 1e-10;
  for (double k : {-4.0, -1.0, 0.0, 2.0, 6.0, 15.0}) {
    const double x = p.a + k * p.b;
    if (x > 0.0 && x < limit) opts.breakpoints.push_back(x);
  }
  return {users, integrate_adaptive(integrand, 0.0, limit, opts).value};
}

}  // namespace mbeam
