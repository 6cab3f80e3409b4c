// Copyright 2026 The gibbsmatch Authors
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

#ifndef GIBBSMATCH_RNG_HPP_
#define GIBBSMATCH_RNG_HPP_

#include <array>
#include <cstdint>

namespace gibbsmatch {

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw,
// "Parallel random numbers: as easy as 1, 2, 3", SC'11). Chosen because the
// output is a pure function of (key, counter): the same (seed, stream,
// position) triple yields the same bits on every platform, which is what the
// reproducible sampling contract needs. The key carries the 64-bit seed, the
// upper counter words carry the stream id, and the lower words count blocks.
class Philox4x32 {
 public:
  using Block = std::array<uint32_t, 4>;

  static Block round10(Block ctr, uint32_t k0, uint32_t k1) {
    for (int r = 0; r < 10; ++r) {
      ctr = round_once(ctr, k0, k1);
      k0 += 0x9E3779B9u;  // golden ratio
      k1 += 0xBB67AE85u;  // sqrt(3) - 1
    }
    return ctr;
  }

 private:
  static Block round_once(const Block& x, uint32_t k0, uint32_t k1) {
    const uint64_t p0 = static_cast<uint64_t>(0xD2511F53u) * x[0];
    const uint64_t p1 = static_cast<uint64_t>(0xCD9E8D57u) * x[2];
    const auto hi0 = static_cast<uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<uint32_t>(p0);
    const auto hi1 = static_cast<uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<uint32_t>(p1);
    return Block{hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
  }
};

// Stream of u64 / doubles drawn from consecutive Philox blocks.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream)
      : key0_(static_cast<uint32_t>(seed)),
        key1_(static_cast<uint32_t>(seed >> 32)),
        stream_(stream) {}

  uint64_t next_u64() {
    if (have_ == 0) refill();
    --have_;
    const uint64_t hi = buf_[2 * have_];
    const uint64_t lo = buf_[2 * have_ + 1];
    return (hi << 32) | lo;
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  void refill() {
    Philox4x32::Block ctr{static_cast<uint32_t>(block_),
                          static_cast<uint32_t>(block_ >> 32),
                          static_cast<uint32_t>(stream_),
                          static_cast<uint32_t>(stream_ >> 32)};
    buf_ = Philox4x32::round10(ctr, key0_, key1_);
    ++block_;
    have_ = 2;
  }

  uint32_t key0_, key1_;
  uint64_t stream_;
  uint64_t block_ = 0;
  Philox4x32::Block buf_{};
  int have_ = 0;
};

}  // namespace gibbsmatch

#endif  // GIBBSMATCH_RNG_HPP_
