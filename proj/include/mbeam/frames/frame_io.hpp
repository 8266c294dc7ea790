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

#include <json.hpp>

#include "mbeam/frames/beamforming_matrix.hpp"

namespace mbeam {

// Frame file layout:
//   {"n_t": 3, "n": 7, "construction": "harmonic{0,1,5}",
//    "entries": [[re, im], ...]}          entries row-major, n_t * n pairs
// Doubles are written in shortest round-trip form, so export/import is
// bit-exact.

nlohmann::json frame_to_json(const BeamformingMatrix& frame);
BeamformingMatrix frame_from_json(const nlohmann::json& j);

void save_frame(const BeamformingMatrix& frame, const std::string& path);
BeamformingMatrix load_frame(const std::string& path);

}  // namespace mbeam
