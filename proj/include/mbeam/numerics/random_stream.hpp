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

#include <array>
#include <cstdint>

#include "mbeam/numerics/complex_matrix.hpp"

namespace mbeam {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Maps a 128-bit counter and a 64-bit key to 128
/// pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Deterministic random stream keyed by (master_seed, substream_index).
///
/// The master seed is the Philox key and the substream index occupies the
/// upper 64 bits of the counter, so every substream is a disjoint slice of
/// the same counter space. A stream's output depends only on its origin,
/// never on how many other streams exist or in which order they were made.
/// Streams are cheap values; copy one to replay it.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t substream_index);

  std::uint64_t master_seed() const { return seed_; }
  std::uint64_t substream_index() const { return substream_; }

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform on the open interval (0, 1); safe to pass to log().
  double uniform_open();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t substream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t substream_index);

/// Circularly symmetric complex Gaussian with E|z|^2 = variance; real and
/// imaginary parts are independent with variance/2 each. Consumes exactly
/// two uniforms (Box-Muller in polar form).
Complex sample_complex_gaussian(RandomStream& stream, double variance);

}  // namespace mbeam
