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

#include "mbeam/frames/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mbeam/error.hpp"

namespace mbeam {

std::vector<double> CorrelationProfile::off_diagonal() const {
  std::vector<double> out;
  for (int l = 0; l < n_beams; ++l)
    for (int n = 0; n < n_beams; ++n)
      if (l != n) out.push_back(at(l, n));
  return out;
}

CorrelationProfile correlation_profile(const BeamformingMatrix& frame) {
  const int n = frame.n_beams();
  CorrelationProfile p;
  p.n_beams = n;
  p.pairwise.assign(static_cast<std::size_t>(n * n), 0.0);
  p.per_column_delta_sq.assign(static_cast<std::size_t>(n), 0.0);
  for (int l = 0; l < n; ++l) {
    p.pairwise[static_cast<std::size_t>(l * n + l)] = 1.0;
    for (int c = l + 1; c < n; ++c) {
      const double v = std::abs(inner(frame.beam(l), frame.beam(c)));
      p.pairwise[static_cast<std::size_t>(l * n + c)] = v;
      p.pairwise[static_cast<std::size_t>(c * n + l)] = v;
      p.delta_max = std::max(p.delta_max, v);
      p.per_column_delta_sq[static_cast<std::size_t>(l)] += v * v;
      p.per_column_delta_sq[static_cast<std::size_t>(c)] += v * v;
    }
  }
  const auto [lo, hi] = std::minmax_element(p.per_column_delta_sq.begin(), p.per_column_delta_sq.end());
  const double tolerance = std::max(kUniformityTolerance, frame.norm_tolerance());
  if (*hi - *lo <= tolerance) {
    p.delta_hat_sq = std::accumulate(p.per_column_delta_sq.begin(), p.per_column_delta_sq.end(), 0.0) / n;
  }
  return p;
}

double require_delta_hat_sq(const CorrelationProfile& profile) {
  if (!profile.delta_hat_sq)
    throw InvalidArgument("frame has non-uniform per-beam interference; delta_hat_sq is undefined");
  return *profile.delta_hat_sq;
}

}  // namespace mbeam
