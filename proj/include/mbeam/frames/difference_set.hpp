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
#include <span>
#include <vector>

namespace mbeam {

/// Perfect (planar) difference set: the k(k-1) differences d_i - d_q,
/// i != q, hit every nonzero residue mod `modulus` exactly once.
struct DifferenceSet {
  int modulus = 0;
  std::vector<int> elements;

  /// Throws InvalidArgument unless `elements` is strictly increasing in
  /// [0, modulus) and perfect.
  static DifferenceSet validated(int modulus, std::vector<int> elements);

  bool operator==(const DifferenceSet&) const = default;
};

/// Direct enumeration of all differences. Does not require sorted input.
bool is_perfect_difference_set(int modulus, std::span<const int> elements);

/// First perfect difference set of the given size in lexicographic order
/// with the smallest element fixed at 0, or nullopt if none exists.
std::optional<DifferenceSet> find_perfect_difference_set(int modulus, int size);

/// Search for the harmonic-frame difference set of an n_t antenna array:
/// modulus n_t^2 - n_t + 1, n_t elements. Supports n_t in {3, 4}.
DifferenceSet difference_set_search(int n_t);

}  // namespace mbeam
