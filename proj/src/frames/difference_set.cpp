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

#include "mbeam/frames/difference_set.hpp"

#include <string>

#include "mbeam/error.hpp"

namespace mbeam {

bool is_perfect_difference_set(int modulus, std::span<const int> elements) {
  if (modulus < 2) return false;
  const auto k = static_cast<long>(elements.size());
  if (k * (k - 1) != modulus - 1) return false;
  std::vector<int> hits(static_cast<std::size_t>(modulus), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t q = 0; q < elements.size(); ++q) {
      if (i == q) continue;
      const int r = ((elements[i] - elements[q]) % modulus + modulus) % modulus;
      if (r == 0 || ++hits[static_cast<std::size_t>(r)] > 1) return false;
    }
  }
  for (int r = 1; r < modulus; ++r)
    if (hits[static_cast<std::size_t>(r)] != 1) return false;
  return true;
}

DifferenceSet DifferenceSet::validated(int modulus, std::vector<int> elements) {
  require(modulus >= 2, "DifferenceSet: modulus must be >= 2");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    require(elements[i] >= 0 && elements[i] < modulus,
            "DifferenceSet: element " + std::to_string(elements[i]) + " outside [0, modulus)");
    require(i == 0 || elements[i] > elements[i - 1], "DifferenceSet: elements must be strictly increasing");
  }
  require(is_perfect_difference_set(modulus, elements),
          "DifferenceSet: differences do not cover every nonzero residue mod " +
              std::to_string(modulus) + " exactly once");
  return DifferenceSet{modulus, std::move(elements)};
}

std::optional<DifferenceSet> find_perfect_difference_set(int modulus, int size) {
  require(modulus >= 2 && size >= 2 && size <= modulus, "find_perfect_difference_set: bad arguments");
  // Lexicographic enumeration of increasing tuples 0 = d_1 < d_2 < ... < d_k < modulus,
  // pruned as soon as a partial tuple repeats a difference.
  std::vector<int> current{0};
  std::vector<int> used(static_cast<std::size_t>(modulus), 0);

  auto mark = [&](int value, int delta) {
    bool clash = false;
    for (int prev : current) {
      const int a = ((value - prev) % modulus + modulus) % modulus;
      const int b = modulus - a;
      used[static_cast<std::size_t>(a)] += delta;
      used[static_cast<std::size_t>(b)] += delta;
      if (delta > 0 && (used[static_cast<std::size_t>(a)] > 1 || used[static_cast<std::size_t>(b)] > 1 || a == b))
        clash = true;
    }
    return clash;
  };

  std::optional<DifferenceSet> found;
  auto extend = [&](auto&& self, int next_min) -> bool {
    if (static_cast<int>(current.size()) == size) {
      if (is_perfect_difference_set(modulus, current)) {
        found = DifferenceSet{modulus, current};
        return true;
      }
      return false;
    }
    for (int v = next_min; v < modulus; ++v) {
      const bool clash = mark(v, +1);
      if (!clash) {
        current.push_back(v);
        if (self(self, v + 1)) return true;
        current.pop_back();
      }
      mark(v, -1);
    }
    return false;
  };
  extend(extend, 1);
  return found;
}

DifferenceSet difference_set_search(int n_t) {
  require(n_t == 3 || n_t == 4, "difference_set_search: supported n_t are 3 and 4 (n_t = p^l + 1)");
  const int modulus = n_t * n_t - n_t + 1;
  auto found = find_perfect_difference_set(modulus, n_t);
  if (!found) throw InvalidArgument("difference_set_search: no perfect difference set mod " + std::to_string(modulus));
  return *found;
}

}  // namespace mbeam
