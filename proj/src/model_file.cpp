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

#include "model_file.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "errors.hpp"
#include "toml_lite.hpp"
#include "util.hpp"

namespace gibbsmatch {

namespace {

using toml_lite::Document;
using toml_lite::Table;
using toml_lite::Value;

Interaction build_table_model(const Document& doc) {
  const Table& root = doc.root;
  const auto tokens = toml_lite::as_string_array(doc, toml_lite::require(doc, root, "alphabet"));
  Alphabet alphabet = [&]() -> Alphabet {
    try {
      return Alphabet(tokens);
    } catch (const std::invalid_argument& e) {
      toml_lite::fail(doc, root.find("alphabet")->line, e.what());
    }
  }();
  const long long range = toml_lite::as_integer(doc, toml_lite::require(doc, root, "range"));
  if (range < 0) toml_lite::fail(doc, root.find("range")->line, "range must be >= 0");

  std::vector<Term> terms;
  for (const auto& [name, table] : doc.table_arrays) {
    if (name != "term") toml_lite::fail(doc, table.line, "unknown table array [[" + name + "]]");
    Term term;
    const Value& offsets_v = toml_lite::require(doc, table, "offsets");
    for (const long long o : toml_lite::as_integer_array(doc, offsets_v)) {
      if (o < 0) toml_lite::fail(doc, offsets_v.line, "offsets must be nonnegative");
      if (o > range)
        toml_lite::fail(doc, offsets_v.line,
                        "offset " + std::to_string(o) + " exceeds declared range " +
                            std::to_string(range));
      term.offsets.push_back(static_cast<uint32_t>(o));
    }
    if (term.offsets.empty()) toml_lite::fail(doc, offsets_v.line, "offsets must be nonempty");
    if (term.offsets.front() != 0)
      toml_lite::fail(doc, offsets_v.line, "offsets must be anchored at 0");
    for (std::size_t i = 1; i < term.offsets.size(); ++i)
      if (term.offsets[i] <= term.offsets[i - 1])
        toml_lite::fail(doc, offsets_v.line, "offsets must be strictly increasing");

    const Value& pattern_v = toml_lite::require(doc, table, "pattern");
    for (const std::string& tok : toml_lite::as_string_array(doc, pattern_v)) {
      const auto idx = alphabet.index_of(tok);
      if (!idx) toml_lite::fail(doc, pattern_v.line, "pattern token '" + tok + "' not in alphabet");
      term.pattern.push_back(*idx);
    }
    if (term.pattern.size() != term.offsets.size())
      toml_lite::fail(doc, pattern_v.line, "pattern length must match offsets length");

    const Value& value_v = toml_lite::require(doc, table, "value");
    term.value = toml_lite::as_number(doc, value_v);
    if (!std::isfinite(term.value))
      toml_lite::fail(doc, value_v.line, "value must be finite");
    terms.push_back(std::move(term));
  }
  return Interaction(std::move(alphabet), std::move(terms));
}

Interaction build_ising_model(const Document& doc) {
  const Table& root = doc.root;
  const Value* coupling = root.find("coupling");
  if (coupling == nullptr) coupling = root.find("J");
  const Value* field = root.find("field");
  if (field == nullptr) field = root.find("h");
  if (coupling == nullptr) toml_lite::fail(doc, root.line, "ising model needs 'coupling' (or 'J')");
  if (field == nullptr) toml_lite::fail(doc, root.line, "ising model needs 'field' (or 'h')");
  return Interaction::ising(toml_lite::as_number(doc, *coupling),
                            toml_lite::as_number(doc, *field));
}

Interaction build_iid_model(const Document& doc) {
  const Table& root = doc.root;
  const Value& probs_v = toml_lite::require(doc, root, "probs");
  const auto probs = toml_lite::as_number_array(doc, probs_v);
  std::optional<Alphabet> alphabet;
  if (const Value* tokens_v = root.find("tokens")) {
    try {
      alphabet = Alphabet(toml_lite::as_string_array(doc, *tokens_v));
    } catch (const std::invalid_argument& e) {
      toml_lite::fail(doc, tokens_v->line, e.what());
    }
  }
  try {
    return Interaction::iid_weights(probs, std::move(alphabet));
  } catch (const std::invalid_argument& e) {
    toml_lite::fail(doc, probs_v.line, e.what());
  }
}

}  // namespace

std::string canonical_model_text(const Interaction& interaction) {
  std::ostringstream out;
  out << "alphabet";
  for (const std::string& tok : interaction.alphabet().tokens()) out << ' ' << tok;
  out << '\n';
  for (const Term& t : interaction.terms()) {
    out << "term";
    for (const uint32_t o : t.offsets) out << ' ' << o;
    out << " |";
    for (const uint32_t s : t.pattern) out << ' ' << s;
    out << " | " << format_real(t.value) << '\n';
  }
  return out.str();
}

std::string model_digest(const Interaction& interaction) {
  return hex64(fnv1a64(canonical_model_text(interaction)));
}

Model make_model(Interaction interaction, std::string id) {
  std::string digest = model_digest(interaction);
  return Model{std::move(interaction), std::move(id), std::move(digest)};
}

Model parse_model_text(std::string_view text, const std::string& source_name,
                       const std::string& fallback_id) {
  const Document doc = toml_lite::parse(text, source_name);

  std::string type = "table";
  if (const Value* type_v = doc.root.find("type")) type = toml_lite::as_string(doc, *type_v);

  Interaction interaction = [&] {
    if (type == "table") return build_table_model(doc);
    if (type == "ising") return build_ising_model(doc);
    if (type == "iid") return build_iid_model(doc);
    toml_lite::fail(doc, doc.root.find("type")->line,
                    "unknown model type '" + type + "' (expected table, ising or iid)");
  }();

  std::string id = fallback_id;
  if (const Value* id_v = doc.root.find("id")) id = toml_lite::as_string(doc, *id_v);
  if (id.empty()) id = "model";
  return make_model(std::move(interaction), std::move(id));
}

Model load_model_file(const std::string& path) {
  const std::string text = read_file(path);
  return parse_model_text(text, path, std::filesystem::path(path).stem().string());
}

}  // namespace gibbsmatch
