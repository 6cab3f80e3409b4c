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

#ifndef GIBBSMATCH_CHAIN_HPP_
#define GIBBSMATCH_CHAIN_HPP_

#include <cstdint>
#include <string>
#include <utility>

#include "sequence.hpp"
#include "transfer.hpp"

namespace gibbsmatch {

// Sampling draws the initial block from the stationary distribution (exact
// start, no burn-in) and extends one symbol at a time by inverse CDF in
// fixed symbol order. Output is a pure function of (model, n, seed, stream).
class StationaryChain {
 public:
  explicit StationaryChain(TransferSystem ts, std::string model_id = "model");

  const TransferSystem& transfer() const { return ts_; }
  const std::string& model_id() const { return model_id_; }

  // Requires n >= block length.
  Sequence sample(uint64_t n, uint64_t seed, uint64_t stream = 0) const;

 private:
  TransferSystem ts_;
  std::string model_id_;
  std::vector<double> pi_cdf_;
  std::vector<double> row_cdf_;  // state-major, m entries per state
};

// Two sequences from split streams of the same seed (streams base+1 and
// base+2), so neither depends on the other's draw count.
std::pair<Sequence, Sequence> sample_pair(const StationaryChain& first,
                                          const StationaryChain& second, uint64_t n,
                                          uint64_t seed, uint64_t stream_base = 0);

// Constant sequence of one symbol (the degenerate point-mass source used as
// a negative control).
Sequence constant_sequence(const Alphabet& alphabet, uint32_t symbol, uint64_t n,
                           std::string model_id = "dirac");

}  // namespace gibbsmatch

#endif  // GIBBSMATCH_CHAIN_HPP_
