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

#include "mbeam/frames/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mbeam/error.hpp"

namespace mbeam {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int resolve_beams(int n_t, int n_beams) {
  require(n_t >= 1 && n_t <= 4, "n_t must lie in [1, 4], got " + std::to_string(n_t));
  const int n = n_beams == 0 ? n_t * n_t : n_beams;
  require(n >= n_t && n <= n_t * n_t,
          "beam count must lie in [n_t, n_t^2], got " + std::to_string(n));
  return n;
}

// exp(-j 2 pi k / n) with k reduced mod n first, so large exponents keep full precision.
Complex root_of_unity(long k, int n) {
  const long r = ((k % n) + n) % n;
  const double angle = -kTwoPi * static_cast<double>(r) / n;
  return {std::cos(angle), std::sin(angle)};
}

// Max over lags 1..N-1 of |sum_r w^{(r-1) lag}| / n_t: the Fourier frame's
// correlation depends only on the lag between columns.
double fourier_delta(std::span<const int> rows, int n) {
  double worst = 0.0;
  for (int lag = 1; lag < n; ++lag) {
    Complex acc{};
    for (int r : rows) acc += root_of_unity(static_cast<long>(r - 1) * lag, n);
    worst = std::max(worst, std::abs(acc) / static_cast<double>(rows.size()));
  }
  return worst;
}

}  // namespace

BeamformingMatrix fourier_frame(int n_t, std::span<const int> selected_rows, int n_beams) {
  const int n = resolve_beams(n_t, n_beams);
  require(static_cast<int>(selected_rows.size()) == n_t,
          "fourier_frame: exactly n_t rows must be selected");
  std::vector<int> rows(selected_rows.begin(), selected_rows.end());
  for (int r : rows)
    require(r >= 1 && r <= n, "fourier_frame: row " + std::to_string(r) + " outside [1, " + std::to_string(n) + "]");
  std::vector<int> sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "fourier_frame: duplicate rows");

  const double scale = 1.0 / std::sqrt(static_cast<double>(n_t));
  ComplexMatrix m(n_t, n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n_t; ++i) m(i, c) = scale * root_of_unity(static_cast<long>(rows[i] - 1) * c, n);
  Construction label{ConstructionKind::kFourier, rows, {}};
  return BeamformingMatrix(std::move(m), std::move(label));
}

double fourier_correlation_closed_form(int n_t, int lag, int n_beams) {
  const int n = resolve_beams(n_t, n_beams);
  const long l = ((static_cast<long>(lag) % n) + n) % n;
  if (l == 0) return 1.0;
  if ((l * n_t) % n == 0) return 0.0;
  const double num = std::sin(std::numbers::pi * static_cast<double>(l) * n_t / n);
  const double den = std::sin(std::numbers::pi * static_cast<double>(l) / n);
  return std::abs(num / den) / n_t;
}

RowSearchResult optimal_row_search(int n_t, int n_beams) {
  require(n_t >= 2 && n_t <= 4, "optimal_row_search: n_t must lie in [2, 4]");
  const int n = resolve_beams(n_t, n_beams);
  // Lexicographic enumeration of n_t-subsets of {1..n}.
  std::vector<int> subset(static_cast<std::size_t>(n_t));
  for (int i = 0; i < n_t; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
  RowSearchResult best{subset, fourier_delta(subset, n)};
  while (true) {
    int i = n_t - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - n_t + i + 1) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n_t; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    const double delta = fourier_delta(subset, n);
    // Strict improvement beyond rounding keeps the first (smallest) subset on ties.
    if (delta < best.delta_max - 1e-12) best = {subset, delta};
  }
  // Report the delta of the frame actually built from these rows.
  best.delta_max = fourier_delta(best.selected_rows, n);
  return best;
}

double welch_lower_bound(int n_t, int n_beams) {
  require(n_t >= 1 && n_beams >= n_t, "welch_lower_bound: need n_beams >= n_t >= 1");
  if (n_beams == n_t) return 0.0;
  return std::sqrt(static_cast<double>(n_beams - n_t) / (static_cast<double>(n_t) * (n_beams - 1)));
}

BeamformingMatrix grassmannian_2x4() {
  using C = Complex;
  auto m = ComplexMatrix::from_rows({
      {C(-0.1612, -0.7348), C(-0.0787, -0.3192), C(-0.2399, 0.5985), C(-0.9541, 0.0)},
      {C(-0.5135, -0.4128), C(-0.2506, 0.9106), C(-0.7641, -0.0212), C(0.2996, 0.0)},
  });
  return BeamformingMatrix(std::move(m), Construction{ConstructionKind::kGrassmannianExplicit, {}, {}}, 1e-3);
}

BeamformingMatrix harmonic_frame(int n_t, const DifferenceSet& ds) {
  require(n_t >= 2 && n_t <= 4, "harmonic_frame: n_t must lie in [2, 4]");
  const int n = n_t * n_t - n_t + 1;
  require(ds.modulus == n, "harmonic_frame: difference set modulus must be n_t^2 - n_t + 1 = " + std::to_string(n));
  require(static_cast<int>(ds.elements.size()) == n_t, "harmonic_frame: difference set must have n_t elements");
  // Re-validate: the struct is an aggregate and may have been built by hand.
  const DifferenceSet checked = DifferenceSet::validated(ds.modulus, ds.elements);

  const double scale = 1.0 / std::sqrt(static_cast<double>(n_t));
  ComplexMatrix m(n_t, n);
  for (int col = 1; col <= n; ++col)
    for (int i = 0; i < n_t; ++i)
      m(i, col - 1) = scale * std::conj(root_of_unity(static_cast<long>(col) * checked.elements[static_cast<std::size_t>(i)], n));
  return BeamformingMatrix(std::move(m), Construction{ConstructionKind::kHarmonic, {}, checked.elements});
}

ComplexMatrix mub_generator(int n_t) {
  using C = Complex;
  const C j(0.0, 1.0);
  if (n_t == 2) {
    auto d = ComplexMatrix::from_rows({{-1.0, j}, {1.0, j}});
    d *= C(0.5, 0.5);
    return d;
  }
  if (n_t == 4) {
    auto d = ComplexMatrix::from_rows({
        {-j, -j, -j, -j},
        {1.0, -1.0, 1.0, -1.0},
        {-j, -j, j, j},
        {-1.0, 1.0, 1.0, -1.0},
    });
    d *= 0.5;
    return d;
  }
  if (n_t == 3)
    throw InvalidArgument(
        "mub: n_t = 3 is not supported; the unitary-generator construction of mutually unbiased "
        "bases requires n_t to be a power of 2 (use n_t = 2 or 4, or the fourier construction for n_t = 3)");
  throw InvalidArgument("mub: supported n_t are 2 and 4, got " + std::to_string(n_t));
}

BeamformingMatrix mub_frame(int n_t) {
  const ComplexMatrix d = mub_generator(n_t);
  ComplexMatrix frame = d;
  ComplexMatrix power = d;
  for (int k = 2; k <= n_t; ++k) {
    power = power * d;
    frame = frame.hconcat(power);
  }
  return BeamformingMatrix(std::move(frame), Construction{ConstructionKind::kMub, {}, {}});
}

BeamformingMatrix randomize_phases(const BeamformingMatrix& frame, std::span<const double> angles) {
  require(static_cast<int>(angles.size()) == frame.n_beams(), "randomize_phases: one angle per beam required");
  ComplexMatrix m = frame.matrix();
  for (int c = 0; c < m.cols(); ++c) {
    const Complex rot = std::polar(1.0, angles[static_cast<std::size_t>(c)]);
    for (auto& v : m.column(c)) v *= rot;
  }
  return BeamformingMatrix(std::move(m), frame.construction(), frame.norm_tolerance());
}

BeamformingMatrix randomize_phases(const BeamformingMatrix& frame, RandomStream& stream) {
  std::vector<double> angles(static_cast<std::size_t>(frame.n_beams()));
  for (auto& a : angles) a = kTwoPi * stream.uniform();
  return randomize_phases(frame, angles);
}

BeamformingMatrix random_orthonormal(int n_t, RandomStream& stream) {
  require(n_t >= 1 && n_t <= 4, "random_orthonormal: n_t must lie in [1, 4]");
  ComplexMatrix m(n_t, n_t);
  for (int c = 0; c < n_t; ++c)
    for (int r = 0; r < n_t; ++r) m(r, c) = sample_complex_gaussian(stream, 1.0);
  orthonormalize_columns(m);
  return BeamformingMatrix(std::move(m), Construction{ConstructionKind::kOrthonormalRandom, {}, {}});
}

}  // namespace mbeam
