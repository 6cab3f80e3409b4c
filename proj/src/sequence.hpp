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

#ifndef GIBBSMATCH_SEQUENCE_HPP_
#define GIBBSMATCH_SEQUENCE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "interaction.hpp"

namespace gibbsmatch {

// A finite word over an alphabet, 0-indexed, with the provenance needed to
// reproduce it (model id and seed).
struct Sequence {
  Alphabet alphabet;
  std::vector<uint32_t> symbols;
  std::string model_id;
  uint64_t seed = 0;

  std::size_t size() const { return symbols.size(); }
};

// File form: a `# model=<id> n=<n> seed=<s>` header line, then the symbols —
// one byte per symbol when every token is a single character, otherwise
// whitespace-separated tokens.
std::string sequence_to_text(const Sequence& seq);
void write_sequence_file(const Sequence& seq, const std::string& path);

// Reading infers the alphabet from the tokens present (match statistics only
// care about equality). read_sequence_pair interns both files into one token
// table so cross-sequence symbol ids agree.
Sequence read_sequence_file(const std::string& path);
std::pair<Sequence, Sequence> read_sequence_pair(const std::string& path_a,
                                                 const std::string& path_b);

}  // namespace gibbsmatch

#endif  // GIBBSMATCH_SEQUENCE_HPP_
