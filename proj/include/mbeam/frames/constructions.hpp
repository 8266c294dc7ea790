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
#include <vector>

#include "mbeam/frames/beamforming_matrix.hpp"
#include "mbeam/frames/difference_set.hpp"
#include "mbeam/numerics/random_stream.hpp"

namespace mbeam {

// ---------------------------------------------------------------------------
// Fourier frames
//
// An N-point DFT restricted to n_t of its rows. Column n (1-based) carries
// (1/sqrt(n_t)) w^{(r-1)(n-1)} in selected row r, with w = exp(-j 2 pi / N).
// N defaults to n_t^2; the (3, 7) and (4, 13) cases use 7- and 13-point DFTs.
// ---------------------------------------------------------------------------

/// `n_beams` of 0 means n_t^2. Rows are 1-based, distinct, in [1, N].
BeamformingMatrix fourier_frame(int n_t, std::span<const int> selected_rows, int n_beams = 0);

/// Correlation between beams `lag` apart in the frame made of the first
/// n_t rows: (1/n_t) |sin(pi lag n_t / N) / sin(pi lag / N)|, 1 at lag 0.
double fourier_correlation_closed_form(int n_t, int lag, int n_beams = 0);

struct RowSearchResult {
  std::vector<int> selected_rows;  // 1-based
  double delta_max = 0.0;
};

/// Exhaustive scan of all C(N, n_t) row subsets; returns the subset with
/// the smallest maximum cross-correlation, ties to the lexicographically
/// smallest subset.
RowSearchResult optimal_row_search(int n_t, int n_beams = 0);

/// sqrt((N - n_t) / (n_t (N - 1))); 0 when N == n_t.
double welch_lower_bound(int n_t, int n_beams);

// ---------------------------------------------------------------------------
// Grassmannian frames
// ---------------------------------------------------------------------------

/// The tabulated 2 x 4 equiangular frame, entries as printed to 4 decimals.
/// Column norms hold only to ~1e-4, so it carries a 1e-3 norm tolerance.
BeamformingMatrix grassmannian_2x4();

/// Harmonic frame: column n = 1..N is (1/sqrt(n_t)) [exp(j 2 pi n d_i / N)]_i.
BeamformingMatrix harmonic_frame(int n_t, const DifferenceSet& ds);

// ---------------------------------------------------------------------------
// Mutually unbiased bases
// ---------------------------------------------------------------------------

/// Unitary generator D with D^{n_t + 1} = I. Only n_t = 2 and 4 exist in
/// the power-of-two construction; n_t = 3 is rejected.
ComplexMatrix mub_generator(int n_t);

/// [D, D^2, ..., D^{n_t}]: n_t^2 beams forming n_t mutually unbiased bases.
BeamformingMatrix mub_frame(int n_t);

// ---------------------------------------------------------------------------
// Per-slot randomization
// ---------------------------------------------------------------------------

/// Multiplies column n by exp(j angles[n]).
BeamformingMatrix randomize_phases(const BeamformingMatrix& frame, std::span<const double> angles);

/// Draws N angles uniformly on [0, 2 pi) from the stream, in beam order.
BeamformingMatrix randomize_phases(const BeamformingMatrix& frame, RandomStream& stream);

/// Isotropically distributed orthonormal basis of C^{n_t}: Gram-Schmidt of
/// an i.i.d. complex Gaussian matrix drawn column by column.
BeamformingMatrix random_orthonormal(int n_t, RandomStream& stream);

}  // namespace mbeam
