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

#include "mbeam/frames/registry.hpp"

#include <algorithm>
#include <numeric>

#include "mbeam/error.hpp"
#include "mbeam/frames/constructions.hpp"
#include "mbeam/frames/difference_set.hpp"

namespace mbeam {
namespace {

// Difference sets of the tabulated harmonic Grassmannian frames.
const std::vector<int> kHarmonic3{0, 1, 5};
const std::vector<int> kHarmonic4{0, 1, 3, 9};

void check_beams(const FrameSpec& s, int expected, const std::string& why) {
  require(s.n_beams == 0 || s.n_beams == expected,
          s.kind + " with n_t = " + std::to_string(s.n_t) + " has exactly N = " + std::to_string(expected) +
              " beams (" + why + "), got N = " + std::to_string(s.n_beams));
}

}  // namespace

const std::vector<std::string>& registered_constructions() {
  static const std::vector<std::string> names{"fourier", "fourier-opt", "grassmannian",
                                              "harmonic", "mub", "orthonormal"};
  return names;
}

FrameSpec resolve(const FrameSpec& spec) {
  FrameSpec s = spec;
  const auto& names = registered_constructions();
  require(std::find(names.begin(), names.end(), s.kind) != names.end(),
          "unknown construction '" + s.kind + "'");
  require(s.n_t >= 1 && s.n_t <= 4, "n_t must lie in [1, 4], got " + std::to_string(s.n_t));

  if (s.kind == "fourier" || s.kind == "fourier-opt") {
    if (s.n_beams == 0) s.n_beams = s.n_t * s.n_t;
    require(s.n_beams >= s.n_t && s.n_beams <= s.n_t * s.n_t,
            s.kind + ": N must lie in [n_t, n_t^2], got " + std::to_string(s.n_beams));
    if (s.kind == "fourier") {
      if (s.rows.empty()) {
        s.rows.resize(static_cast<std::size_t>(s.n_t));
        std::iota(s.rows.begin(), s.rows.end(), 1);
      }
    } else {
      require(s.n_t >= 2, "fourier-opt: n_t must lie in [2, 4]");
      require(s.rows.empty(), "fourier-opt: rows are found by search and may not be given");
    }
    require(s.difference_set.empty(), s.kind + ": difference_set does not apply");
  } else if (s.kind == "grassmannian") {
    require(s.n_t >= 2 && s.n_t <= 4,
            "grassmannian: tabulated optimal frames exist for n_t = 2, 3, 4 (N = 4, 7, 13)");
    const int n = s.n_t == 2 ? 4 : s.n_t * s.n_t - s.n_t + 1;
    check_beams(s, n, "tabulated optimal Grassmannian frame");
    s.n_beams = n;
    require(s.rows.empty() && s.difference_set.empty(), "grassmannian: takes no rows or difference set");
  } else if (s.kind == "harmonic") {
    require(s.n_t == 3 || s.n_t == 4, "harmonic: n_t must be 3 or 4 (n_t - 1 a prime power)");
    const int n = s.n_t * s.n_t - s.n_t + 1;
    check_beams(s, n, "N = n_t^2 - n_t + 1");
    s.n_beams = n;
    if (s.difference_set.empty()) s.difference_set = difference_set_search(s.n_t).elements;
    DifferenceSet::validated(n, s.difference_set);
    require(s.rows.empty(), "harmonic: rows do not apply");
  } else if (s.kind == "mub") {
    mub_generator(s.n_t);  // throws the explanatory error for unsupported n_t
    check_beams(s, s.n_t * s.n_t, "n_t bases of n_t vectors");
    s.n_beams = s.n_t * s.n_t;
    require(s.rows.empty() && s.difference_set.empty(), "mub: takes no rows or difference set");
  } else {  // orthonormal
    check_beams(s, s.n_t, "orthogonal baseline");
    s.n_beams = s.n_t;
    require(s.rows.empty() && s.difference_set.empty(), "orthonormal: takes no rows or difference set");
  }
  return s;
}

BeamformingMatrix build_frame(const FrameSpec& spec) {
  const FrameSpec s = resolve(spec);
  if (s.kind == "fourier") return fourier_frame(s.n_t, s.rows, s.n_beams);
  if (s.kind == "fourier-opt") {
    const auto best = optimal_row_search(s.n_t, s.n_beams);
    return fourier_frame(s.n_t, best.selected_rows, s.n_beams);
  }
  if (s.kind == "grassmannian") {
    if (s.n_t == 2) return grassmannian_2x4();
    const auto& d = s.n_t == 3 ? kHarmonic3 : kHarmonic4;
    return harmonic_frame(s.n_t, DifferenceSet::validated(s.n_beams, d));
  }
  if (s.kind == "harmonic") return harmonic_frame(s.n_t, DifferenceSet::validated(s.n_beams, s.difference_set));
  if (s.kind == "mub") return mub_frame(s.n_t);
  return BeamformingMatrix(ComplexMatrix::identity(s.n_t),
                           Construction{ConstructionKind::kOrthonormalRandom, {}, {}});
}

FrameSpec max_beam_grassmannian(int n_t) {
  FrameSpec s;
  s.kind = "grassmannian";
  s.n_t = n_t;
  return resolve(s);
}

void to_json(nlohmann::json& j, const FrameSpec& spec) {
  j = nlohmann::json{{"kind", spec.kind}, {"n_t", spec.n_t}, {"n_beams", spec.n_beams}};
  if (!spec.rows.empty()) j["rows"] = spec.rows;
  if (!spec.difference_set.empty()) j["difference_set"] = spec.difference_set;
}

void from_json(const nlohmann::json& j, FrameSpec& spec) {
  try {
    if (j.is_string()) {
      spec = FrameSpec{};
      spec.kind = j.get<std::string>();
      return;
    }
    spec.kind = j.value("kind", std::string("grassmannian"));
    spec.n_t = j.value("n_t", 3);
    spec.n_beams = j.value("n_beams", 0);
    spec.rows = j.value("rows", std::vector<int>{});
    spec.difference_set = j.value("difference_set", std::vector<int>{});
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("construction spec: ") + e.what());
  }
}

}  // namespace mbeam
