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

#include "chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "rng.hpp"

namespace gibbsmatch {

StationaryChain::StationaryChain(TransferSystem ts, std::string model_id)
    : ts_(std::move(ts)), model_id_(std::move(model_id)) {
  const std::size_t states = ts_.state_count();
  const std::size_t m = ts_.symbol_count();
  pi_cdf_.resize(states);
  double acc = 0.0;
  for (std::size_t x = 0; x < states; ++x) {
    acc += ts_.stationary(x);
    pi_cdf_[x] = acc;
  }
  pi_cdf_.back() = 1.0;

  row_cdf_.resize(states * m);
  for (std::size_t x = 0; x < states; ++x) {
    acc = 0.0;
    for (uint32_t a = 0; a < m; ++a) {
      acc += ts_.transition(x, a);
      row_cdf_[x * m + a] = acc;
    }
    row_cdf_[x * m + (m - 1)] = 1.0;
  }
}

Sequence StationaryChain::sample(uint64_t n, uint64_t seed, uint64_t stream) const {
  const uint32_t block = ts_.block_length();
  if (n < block)
    throw std::invalid_argument("sample length must be at least the block length " +
                                std::to_string(block));
  const std::size_t m = ts_.symbol_count();
  CounterRng rng(seed, stream);

  Sequence seq{ts_.alphabet(), {}, model_id_, seed};
  seq.symbols.resize(n);

  const double u0 = rng.next_double();
  const std::size_t state0 = static_cast<std::size_t>(
      std::upper_bound(pi_cdf_.begin(), pi_cdf_.end(), u0) - pi_cdf_.begin());
  std::size_t state = std::min(state0, ts_.state_count() - 1);
  ts_.decode_state(state, std::span(seq.symbols).first(block));

  for (uint64_t t = block; t < n; ++t) {
    const double u = rng.next_double();
    const double* row = row_cdf_.data() + state * m;
    uint32_t a = 0;
    while (a + 1 < m && u >= row[a]) ++a;
    seq.symbols[t] = a;
    state = ts_.successor(state, a);
  }
  return seq;
}

std::pair<Sequence, Sequence> sample_pair(const StationaryChain& first,
                                          const StationaryChain& second, uint64_t n,
                                          uint64_t seed, uint64_t stream_base) {
  if (!(first.transfer().alphabet() == second.transfer().alphabet()))
    throw std::invalid_argument("paired sampling needs a shared alphabet");
  Sequence a = first.sample(n, seed, stream_base + 1);
  Sequence b = second.sample(n, seed, stream_base + 2);
  return {std::move(a), std::move(b)};
}

Sequence constant_sequence(const Alphabet& alphabet, uint32_t symbol, uint64_t n,
                           std::string model_id) {
  if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
  if (symbol >= alphabet.size()) throw std::invalid_argument("symbol outside alphabet");
  Sequence seq{alphabet, {}, std::move(model_id), 0};
  seq.symbols.assign(n, symbol);
  return seq;
}

}  // namespace gibbsmatch
