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

#include "mbeam/frames/frame_io.hpp"

#include <fstream>

#include "mbeam/error.hpp"

namespace mbeam {

nlohmann::json frame_to_json(const BeamformingMatrix& frame) {
  nlohmann::json entries = nlohmann::json::array();
  const auto& m = frame.matrix();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"n_t", frame.n_t()},
          {"n", frame.n_beams()},
          {"construction", frame.construction().label()},
          {"entries", std::move(entries)}};
}

BeamformingMatrix frame_from_json(const nlohmann::json& j) {
  try {
    const int nt = j.at("n_t").get<int>();
    const int n = j.at("n").get<int>();
    require(nt >= 1 && n >= 1, "frame file: n_t and n must be positive");
    const auto construction = Construction::parse(j.at("construction").get<std::string>());
    const auto& entries = j.at("entries");
    require(entries.is_array() && entries.size() == static_cast<std::size_t>(nt) * static_cast<std::size_t>(n),
            "frame file: expected n_t * n entries");
    ComplexMatrix m(nt, n);
    std::size_t k = 0;
    for (int r = 0; r < nt; ++r)
      for (int c = 0; c < n; ++c, ++k) {
        const auto& e = entries[k];
        require(e.is_array() && e.size() == 2, "frame file: each entry must be [re, im]");
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      }
    const double tol = construction.kind == ConstructionKind::kGrassmannianExplicit ? 1e-3 : kUnitNormTolerance;
    return BeamformingMatrix(std::move(m), construction, tol);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("frame file: ") + e.what());
  }
}

void save_frame(const BeamformingMatrix& frame, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write frame file '" + path + "'");
  out << frame_to_json(frame).dump(2) << '\n';
}

BeamformingMatrix load_frame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read frame file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("frame file '" + path + "': " + e.what());
  }
  return frame_from_json(j);
}

}  // namespace mbeam
