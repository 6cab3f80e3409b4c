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

#ifndef GIBBSMATCH_MATCHER_HPP_
#define GIBBSMATCH_MATCHER_HPP_

#include <cstdint>
#include <span>

namespace gibbsmatch {

using SymbolSpan = std::span<const uint32_t>;

struct OverlapReport {
  uint64_t length = 0;
  bool found = false;
  uint64_t i = 0;  // witness window starts, lexicographically smallest (i, j)
  uint64_t j = 0;
};

struct CrossOverlapReport {
  OverlapReport constrained;    // pairs with i != j, as the two-string count demands
  OverlapReport unconstrained;  // plain longest common window, for comparison
};

struct HittingReport {
  bool finite = false;
  uint64_t prefix_length = 0;  // minimal n' whose prefix contains a k-match
  uint64_t i = 0;
  uint64_t j = 0;
};

// Number of unordered pairs i < j <= n-k of equal k-windows, by direct
// window comparison. This is the oracle the fast paths are tested against.
uint64_t count_matches_naive(SymbolSpan s, uint32_t k);

// Same value via fingerprint grouping with every bucket verified by direct
// comparison, so the count stays exact even across hash collisions.
uint64_t count_matches(SymbolSpan s, uint32_t k);

// Longest repeated window (occurrences may overlap); 0 when all symbols are
// distinct. Suffix array + adjacent LCP maximum.
OverlapReport max_match(SymbolSpan s);

// Minimal prefix length whose window set contains a repeat of length k;
// scans incrementally, finalizing one window per position.
HittingReport first_match_time(SymbolSpan s, uint32_t k);

// True iff [N = 0], [M < k] and [T infinite] agree on this sequence; the
// three events come from the three independent implementations above.
bool duality_check(SymbolSpan s, uint32_t k);

// Ordered pairs (i, j), j != i, with s-window i equal to t-window j.
// Sequences must have equal length.
uint64_t cross_count_naive(SymbolSpan s, SymbolSpan t, uint32_t k);
uint64_t cross_count(SymbolSpan s, SymbolSpan t, uint32_t k);

// Longest common window via a generalized suffix array, reported both with
// the diagonal pairs (i == j) excluded and without.
CrossOverlapReport max_cross_match(SymbolSpan s, SymbolSpan t);

}  // namespace gibbsmatch

#endif  // GIBBSMATCH_MATCHER_HPP_
