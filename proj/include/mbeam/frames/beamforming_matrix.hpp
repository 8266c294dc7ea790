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

#include <span>
#include <string>
#include <vector>

#include "mbeam/numerics/complex_matrix.hpp"

namespace mbeam {

enum class ConstructionKind {
  kFourier,
  kGrassmannianExplicit,
  kHarmonic,
  kMub,
  kOrthonormalRandom,
};

/// Provenance of a beamforming matrix.
struct Construction {
  ConstructionKind kind = ConstructionKind::kFourier;
  /// fourier: 1-based row indices of the DFT that were kept.
  std::vector<int> selected_rows;
  /// harmonic: difference set used for the exponents.
  std::vector<int> difference_set;

  /// Text form such as "fourier{3,7,9}", "harmonic{0,1,5}" or "mub".
  std::string label() const;
  static Construction parse(const std::string& label);

  bool operator==(const Construction&) const = default;
};

/// Default tolerance on the unit-norm invariant of every beam.
inline constexpr double kUnitNormTolerance = 1e-12;

/// N_t x N complex matrix whose columns are unit-norm beam vectors.
/// Immutable once built; safe to share across threads.
class BeamformingMatrix {
 public:
  /// Validates 1 <= n_t <= 4, n_t <= N <= n_t^2, and |b_n| = 1 within
  /// `norm_tolerance`. Matrices transcribed from printed 4-decimal values
  /// carry a looser tolerance, which downstream uniformity checks inherit.
  BeamformingMatrix(ComplexMatrix columns, Construction construction,
                    double norm_tolerance = kUnitNormTolerance);

  int n_t() const { return matrix_.rows(); }
  int n_beams() const { return matrix_.cols(); }

  /// Beam vector b_n for 0-based n.
  std::span<const Complex> beam(int n) const { return matrix_.column(n); }

  const ComplexMatrix& matrix() const { return matrix_; }
  const Construction& construction() const { return construction_; }
  double norm_tolerance() const { return norm_tolerance_; }

 private:
  ComplexMatrix matrix_;
  Construction construction_;
  double norm_tolerance_;
};

}  // namespace mbeam
