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

#include "suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace gibbsmatch {

namespace {

// Stable counting sort of `order` by key[order[i]]; keys must be < bucket_count.
void counting_sort(const std::vector<uint32_t>& keys, std::vector<uint32_t>& order,
                   std::vector<uint32_t>& scratch, std::vector<uint32_t>& buckets,
                   uint32_t bucket_count) {
  buckets.assign(bucket_count + 1, 0);
  for (const uint32_t i : order) ++buckets[keys[i] + 1];
  for (uint32_t b = 1; b <= bucket_count; ++b) buckets[b] += buckets[b - 1];
  scratch.resize(order.size());
  for (const uint32_t i : order) scratch[buckets[keys[i]]++] = i;
  order.swap(scratch);
}

}  // namespace

std::vector<uint32_t> build_suffix_array(std::span<const uint32_t> text) {
  const auto n = static_cast<uint32_t>(text.size());
  std::vector<uint32_t> sa(n);
  if (n == 0) return sa;
  std::iota(sa.begin(), sa.end(), 0);
  if (n == 1) return sa;

  // Initial ranks: compress raw symbols via two 16-bit radix passes.
  std::vector<uint32_t> rank(n), key(n), scratch, buckets;
  {
    for (uint32_t i = 0; i < n; ++i) key[i] = text[i] & 0xffffu;
    counting_sort(key, sa, scratch, buckets, 1u << 16);
    for (uint32_t i = 0; i < n; ++i) key[i] = text[i] >> 16;
    counting_sort(key, sa, scratch, buckets, 1u << 16);
    uint32_t classes = 0;
    rank[sa[0]] = 0;
    for (uint32_t i = 1; i < n; ++i) {
      if (text[sa[i]] != text[sa[i - 1]]) ++classes;
      rank[sa[i]] = classes;
    }
    if (classes == n - 1) return sa;
  }

  std::vector<uint32_t> new_rank(n);
  for (uint32_t h = 1; h < n; h <<= 1) {
    // Sort by (rank[i], rank[i+h]), missing second key sorts first.
    for (uint32_t i = 0; i < n; ++i)
      key[i] = (i + h < n) ? rank[i + h] + 1 : 0;
    counting_sort(key, sa, scratch, buckets, n + 1);
    counting_sort(rank, sa, scratch, buckets, n);

    uint32_t classes = 0;
    new_rank[sa[0]] = 0;
    for (uint32_t i = 1; i < n; ++i) {
      const uint32_t a = sa[i - 1];
      const uint32_t b = sa[i];
      const uint32_t a2 = (a + h < n) ? rank[a + h] + 1 : 0;
      const uint32_t b2 = (b + h < n) ? rank[b + h] + 1 : 0;
      if (rank[a] != rank[b] || a2 != b2) ++classes;
      new_rank[b] = classes;
    }
    rank.swap(new_rank);
    if (classes == n - 1) break;
  }
  return sa;
}

std::vector<uint32_t> build_lcp_array(std::span<const uint32_t> text,
                                      std::span<const uint32_t> sa) {
  const auto n = static_cast<uint32_t>(text.size());
  std::vector<uint32_t> lcp(n, 0);
  if (n == 0) return lcp;
  std::vector<uint32_t> inv(n);
  for (uint32_t i = 0; i < n; ++i) inv[sa[i]] = i;
  uint32_t h = 0;
  for (uint32_t i = 0; i < n; ++i) {
    if (inv[i] == 0) {
      h = 0;
      continue;
    }
    const uint32_t j = sa[inv[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[inv[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace gibbsmatch
