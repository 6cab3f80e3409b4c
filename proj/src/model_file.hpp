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

#ifndef GIBBSMATCH_MODEL_FILE_HPP_
#define GIBBSMATCH_MODEL_FILE_HPP_

#include <string>
#include <string_view>

#include "interaction.hpp"

namespace gibbsmatch {

// An interaction plus the identity metadata carried into sequence headers
// and run manifests. The digest is over the canonical term table, so two
// files describing the same interaction share a digest.
struct Model {
  Interaction interaction;
  std::string id;
  std::string digest;
};

// File schema (see models/ for examples):
//   type = "table" (default) with alphabet/range/[[term]] entries, or the
//   shorthand stanzas type = "ising" (coupling/field, aliases J/h) and
//   type = "iid" (probs, optional tokens).
// Violations are reported as ParseError with the offending line number.
Model load_model_file(const std::string& path);
Model parse_model_text(std::string_view text, const std::string& source_name,
                       const std::string& fallback_id);

std::string canonical_model_text(const Interaction& interaction);
std::string model_digest(const Interaction& interaction);

Model make_model(Interaction interaction, std::string id);

}  // namespace gibbsmatch

#endif  // GIBBSMATCH_MODEL_FILE_HPP_
