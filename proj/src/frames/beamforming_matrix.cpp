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

#include "mbeam/frames/beamforming_matrix.hpp"

#include <cmath>
#include <sstream>

#include "mbeam/error.hpp"

namespace mbeam {
namespace {

std::string join_braced(const std::vector<int>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << '}';
  return out.str();
}

std::vector<int> parse_braced(const std::string& text) {
  std::vector<int> values;
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw InvalidArgument("construction label: expected {a,b,...}, got '" + text + "'");
  std::string body = text.substr(1, text.size() - 2);
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("construction label: bad integer '" + item + "'");
    }
  }
  return values;
}

}  // namespace

std::string Construction::label() const {
  switch (kind) {
    case ConstructionKind::kFourier: return "fourier" + join_braced(selected_rows);
    case ConstructionKind::kGrassmannianExplicit: return "grassmannian_explicit";
    case ConstructionKind::kHarmonic: return "harmonic" + join_braced(difference_set);
    case ConstructionKind::kMub: return "mub";
    case ConstructionKind::kOrthonormalRandom: return "orthonormal_random";
  }
  return "unknown";
}

Construction Construction::parse(const std::string& label) {
  Construction c;
  const auto brace = label.find('{');
  const std::string head = label.substr(0, brace);
  const std::string tail = brace == std::string::npos ? "" : label.substr(brace);
  if (head == "fourier") {
    c.kind = ConstructionKind::kFourier;
    c.selected_rows = parse_braced(tail);
  } else if (head == "harmonic") {
    c.kind = ConstructionKind::kHarmonic;
    c.difference_set = parse_braced(tail);
  } else if (head == "grassmannian_explicit" && tail.empty()) {
    c.kind = ConstructionKind::kGrassmannianExplicit;
  } else if (head == "mub" && tail.empty()) {
    c.kind = ConstructionKind::kMub;
  } else if (head == "orthonormal_random" && tail.empty()) {
    c.kind = ConstructionKind::kOrthonormalRandom;
  } else {
    throw InvalidArgument("unknown construction label '" + label + "'");
  }
  return c;
}

BeamformingMatrix::BeamformingMatrix(ComplexMatrix columns, Construction construction,
                                     double norm_tolerance)
    : matrix_(std::move(columns)), construction_(std::move(construction)), norm_tolerance_(norm_tolerance) {
  const int nt = matrix_.rows();
  const int n = matrix_.cols();
  require(nt >= 1 && nt <= 4, "BeamformingMatrix: n_t must lie in [1, 4], got " + std::to_string(nt));
  require(n >= nt && n <= nt * nt,
          "BeamformingMatrix: beam count must lie in [n_t, n_t^2], got " + std::to_string(n));
  require(norm_tolerance > 0.0, "BeamformingMatrix: norm tolerance must be positive");
  for (int c = 0; c < n; ++c) {
    const double len = norm(matrix_.column(c));
    require(std::abs(len - 1.0) <= norm_tolerance,
            "BeamformingMatrix: beam " + std::to_string(c + 1) + " has norm " + std::to_string(len));
  }
}

}  // namespace mbeam
