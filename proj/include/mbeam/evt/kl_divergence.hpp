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

#include "mbeam/evt/sinr_model.hpp"

namespace mbeam {

struct KlReport {
  int users = 0;
  double divergence_bits = 0.0;
};

/// Kullback-Leibler divergence, in bits, of the Gumbel approximation from
/// the exact law K f F^{K-1} of the maximum SINR. The integral runs over
/// the support [0, 1/delta_hat_sq) of the exact law and is evaluated in
/// log space, so it stays finite for large K. Requires K >= 2.
KlReport kl_divergence(const SinrModel& model, int users);

}  // namespace mbeam
