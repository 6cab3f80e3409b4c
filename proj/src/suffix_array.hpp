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

#ifndef GIBBSMATCH_SUFFIX_ARRAY_HPP_
#define GIBBSMATCH_SUFFIX_ARRAY_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace gibbsmatch {

// Prefix-doubling construction with counting-sort passes: O(n log n) worst
// case, no assumptions on the symbol values.
std::vector<uint32_t> build_suffix_array(std::span<const uint32_t> text);

// Kasai's adjacent-LCP scan; lcp[i] is the common prefix length of
// sa[i-1] and sa[i], lcp[0] = 0.
std::vector<uint32_t> build_lcp_array(std::span<const uint32_t> text,
                                      std::span<const uint32_t> sa);

}  // namespace gibbsmatch

#endif  // GIBBSMATCH_SUFFIX_ARRAY_HPP_
