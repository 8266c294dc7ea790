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
#include <vector>

#include "mbeam/frames/beamforming_matrix.hpp"

namespace mbeam {

/// Per-column sums must agree this closely for delta_hat_sq to be set. A
/// matrix with a looser norm tolerance (printed entries) widens this to its
/// own tolerance.
inline constexpr double kUniformityTolerance = 1e-9;

/// Pairwise beam correlations |b_l^H b_n| and the aggregate interference
/// constant used by the extreme-value analysis.
struct CorrelationProfile {
  int n_beams = 0;
  /// Row-major N x N magnitudes.
  std::vector<double> pairwise;
  /// Largest off-diagonal magnitude (0 for a single beam).
  double delta_max = 0.0;
  /// For each beam n: sum over l != n of |b_l^H b_n|^2.
  std::vector<double> per_column_delta_sq;
  /// Common value of per_column_delta_sq, unset when the frame is not uniform.
  std::optional<double> delta_hat_sq;

  double at(int l, int n) const { return pairwise[static_cast<std::size_t>(l * n_beams + n)]; }
  std::vector<double> off_diagonal() const;
};

CorrelationProfile correlation_profile(const BeamformingMatrix& frame);

/// delta_hat_sq, or InvalidArgument for frames with non-uniform interference.
double require_delta_hat_sq(const CorrelationProfile& profile);

}  // namespace mbeam
