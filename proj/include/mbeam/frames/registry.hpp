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

#include <string>
#include <vector>

#include <json.hpp>

#include "mbeam/frames/beamforming_matrix.hpp"

namespace mbeam {

/// User-facing description of a construction, keyed by registry name:
/// "fourier", "fourier-opt", "grassmannian", "harmonic", "mub", "orthonormal".
/// Zero / empty fields take the construction's default.
struct FrameSpec {
  std::string kind = "grassmannian";
  int n_t = 3;
  int n_beams = 0;
  std::vector<int> rows;            // fourier
  std::vector<int> difference_set;  // harmonic

  bool operator==(const FrameSpec&) const = default;
};

const std::vector<std::string>& registered_constructions();

/// Fills every default (beam count, rows, difference set) and validates
/// (n_t, N) against what the construction can deliver. Throws
/// InvalidArgument with an explanation otherwise.
FrameSpec resolve(const FrameSpec& spec);

/// Builds the base (pre-randomization) frame. For "orthonormal" this is the
/// identity basis labelled orthonormal_random; simulations draw a fresh
/// isotropic basis per slot instead of phase-rotating it.
BeamformingMatrix build_frame(const FrameSpec& spec);

/// The largest-N Grassmannian construction for n_t antennas (N = 4, 7, 13).
FrameSpec max_beam_grassmannian(int n_t);

void to_json(nlohmann::json& j, const FrameSpec& spec);
void from_json(const nlohmann::json& j, FrameSpec& spec);

}  // namespace mbeam
